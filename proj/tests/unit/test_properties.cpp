#include <doctest.h>

#include <random>

#include "qcong/series.hpp"

using namespace qcong;

namespace {

constexpr int kCases = 1000;

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  Int coeff() {
    Int v(static_cast<long>(rng() % 2000001) - 1000000);
    if (rng() % 8 == 0) v *= Int("1000000000000000000000007");
    return v;
  }

  QSeries series(std::int64_t min_len = 1, std::int64_t max_len = 40) {
    const std::int64_t len = min_len + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_len - min_len + 1));
    std::vector<Int> c(static_cast<std::size_t>(len));
    for (auto& v : c) v = rng() % 4 == 0 ? Int(0) : coeff();
    return QSeries(static_cast<std::int64_t>(rng() % 4), std::move(c));
  }

  /// Series with constant term ±1.
  QSeries unit(std::int64_t len) {
    std::vector<Int> c(static_cast<std::size_t>(len));
    c[0] = rng() % 2 ? 1 : -1;
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = coeff();
    return QSeries(0, std::move(c));
  }
};

void check_equal(const QSeries& a, const QSeries& b) {
  REQUIRE(a.trunc() == b.trunc());
  REQUIRE_FALSE(first_mismatch(a, b, a.trunc()).has_value());
}

}  // namespace

TEST_CASE("ring axioms on random series") {
  Gen g(2024);
  for (int i = 0; i < kCases; ++i) {
    const auto a = g.series(), b = g.series(), c = g.series();
    check_equal(a + b, b + a);
    check_equal((a + b) + c, a + (b + c));
    check_equal(a * b, b * a);
    check_equal((a * b) * c, a * (b * c));
    const auto lhs = a * (b + c);
    const auto rhs = a * b + a * c;
    const auto upto = std::min(lhs.trunc(), rhs.trunc());
    REQUIRE_FALSE(first_mismatch(lhs, rhs, upto).has_value());
    check_equal(a + QSeries::zero(a.trunc()), a);
    REQUIRE((a - a).is_zero());
    check_equal(a * QSeries::one(a.trunc()), a);
  }
}

TEST_CASE("inverse and division on random units") {
  Gen g(77);
  for (int i = 0; i < kCases; ++i) {
    const std::int64_t len = 1 + static_cast<std::int64_t>(g.rng() % 40);
    const auto u = g.unit(len);
    const auto inv = invert(u);
    check_equal(u * inv, QSeries::one(len));
    std::vector<Int> c(static_cast<std::size_t>(len));
    for (auto& v : c) v = g.coeff();
    const QSeries a(0, std::move(c));
    check_equal(divide(a, u) * u, a);
    const auto sh = shift(u, 1 + static_cast<std::int64_t>(g.rng() % 3));
    const auto sinv = invert(sh);
    const auto prod = sh * sinv;
    REQUIRE_FALSE(first_mismatch(prod, QSeries::one(prod.trunc()), prod.trunc()).has_value());
  }
}

TEST_CASE("progression extraction undoes substitution") {
  Gen g(5);
  for (int i = 0; i < kCases; ++i) {
    const auto a = g.series();
    const std::int64_t m = 1 + static_cast<std::int64_t>(g.rng() % 7);
    const auto back = extract_progression(substitute_power(a, m), m, 0);
    REQUIRE(back.trunc() == a.trunc());
    REQUIRE_FALSE(first_mismatch(back, a, a.trunc()).has_value());
    for (std::int64_t r = 1; r < m; ++r) REQUIRE(extract_progression(substitute_power(a, m), m, r).is_zero());

    // Σ_r q^r · (U_{m,r} a)(q^m) rebuilds a.
    const auto b = g.series(m, 60).with_offset(0);
    QSeries rebuilt = QSeries::zero(b.trunc());
    for (std::int64_t r = 0; r < m; ++r) {
      const auto piece = shift(substitute_power(extract_progression(b, m, r), m), r);
      rebuilt = rebuilt + piece.with_offset(std::min<std::int64_t>(0, piece.offset()));
    }
    const auto upto = std::min(rebuilt.trunc(), b.trunc());
    REQUIRE_FALSE(first_mismatch(rebuilt, b, upto).has_value());
    REQUIRE(upto == b.trunc());
  }
}
