#include <doctest.h>

#include <random>

#include "qcong/series.hpp"

using namespace qcong;

TEST_CASE("construction and accessors") {
  const auto s = QSeries::from_ints({0, 3, -1}, 2);
  CHECK(s.offset() == 2);
  CHECK(s.trunc() == 5);
  CHECK(s.at(0) == 0);
  CHECK(s.at(3) == 3);
  CHECK(s.order() == 3);
  CHECK_THROWS_AS(s.at(5), TruncationError);
  CHECK_THROWS_AS(s.coefficient(1), std::out_of_range);
  CHECK_THROWS_AS(QSeries(0, {}), std::invalid_argument);
  CHECK(QSeries::zero(4).is_zero());
  CHECK_FALSE(QSeries::zero(4).order().has_value());
  CHECK(s.normalized().offset() == 3);
  CHECK(s.normalized().trunc() == 5);
}

TEST_CASE("addition keeps the smaller truncation") {
  const auto a = QSeries::from_ints({1, 2, 3, 4});
  const auto b = QSeries::from_ints({5, 6});
  const auto c = a + b;
  CHECK(c.trunc() == 2);
  CHECK(c.at(0) == 6);
  CHECK(c.at(1) == 8);
  CHECK((a - a).is_zero());
  CHECK((-a).at(3) == -4);
}

TEST_CASE("multiplication truncation follows the operand offsets") {
  const auto a = QSeries::from_ints({1, 1}, 1);  // q + q^2, known to q^3
  const auto b = QSeries::from_ints({1, 0, 0, 0, 0});
  const auto c = a * b;
  CHECK(c.offset() == 1);
  CHECK(c.trunc() == 3);
  CHECK(c.at(2) == 1);
}

TEST_CASE("shift, truncate and offsets") {
  const auto a = QSeries::from_ints({1, 2, 3});
  const auto s = shift(a, -1);
  CHECK(s.offset() == -1);
  CHECK(s.at(1) == 3);
  CHECK(a.truncated(2).trunc() == 2);
  CHECK_THROWS_AS(a.truncated(4), TruncationError);
  CHECK(a.with_offset(-2).at(-2) == 0);
  CHECK_THROWS_AS(a.with_offset(1), std::invalid_argument);
}

TEST_CASE("invert and divide") {
  const auto e = QSeries::from_ints({1, -1, -1, 0, 0, 1, 0, 1, 0, 0});
  const auto inv = invert(e);
  const std::vector<long> p = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  for (std::size_t n = 0; n < p.size(); ++n) CHECK(inv.at(static_cast<std::int64_t>(n)) == p[n]);
  const auto one = e * inv;
  CHECK(one == QSeries::one(10));
  CHECK(divide(e, e) == QSeries::one(10));
  CHECK_THROWS(invert(QSeries::from_ints({2, 1})));
  CHECK_THROWS(invert(QSeries::zero(5)));
}

TEST_CASE("pow with negative exponent") {
  const auto a = QSeries::from_ints({1, 1, 0, 0, 0, 0});
  const auto inv3 = pow(a, -3);
  CHECK(pow(a, 3) * inv3 == QSeries::one(6));
  CHECK(pow(a, 0) == QSeries::one(6));
  // (1+q)^-3 = Σ (-1)^n C(n+2, 2) q^n
  CHECK(inv3.at(4) == 15);
  CHECK(inv3.at(5) == -21);
}

TEST_CASE("progression extraction and substitution") {
  const auto a = QSeries::from_ints({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  const auto u = extract_progression(a, 5, 4);
  CHECK(u.trunc() == 2);
  CHECK(u.at(0) == 4);
  CHECK(u.at(1) == 9);
  const auto s = substitute_power(QSeries::from_ints({1, 2}), 3);
  CHECK(s.trunc() == 6);
  CHECK(s.at(3) == 2);
  CHECK(s.at(4) == 0);
  CHECK_THROWS_AS(extract_progression(a, 5, 5), std::invalid_argument);
  CHECK_THROWS_AS(substitute_power(a, 0), std::invalid_argument);
}

TEST_CASE("valuation and reduction") {
  const auto a = QSeries::from_ints({25, 50, 0, 125});
  CHECK(series_valuation(a, 5) == 2u);
  CHECK_FALSE(series_valuation(QSeries::zero(3), 5).has_value());
  CHECK(reduce_mod(QSeries::from_ints({-1, 7}), Int(5)).at(0) == 4);
  CHECK(divide_exact(a, Int(25)).has_value());
  CHECK_FALSE(divide_exact(a, Int(125)).has_value());
  CHECK(valuation(Int(0), 5) == std::nullopt);
  CHECK(valuation(Rat(2, 25), 5) == -2);
}

TEST_CASE("rational round trip") {
  const auto a = QSeries::from_ints({3, -4, 5}, 1);
  CHECK(to_integral(to_rational(a)).value() == a);
  auto r = to_rational(a);
  r.mutable_coeffs()[0] = Rat(1, 2);
  CHECK_FALSE(to_integral(r).has_value());
}

TEST_CASE("first_mismatch requires both operands to be known") {
  const auto a = QSeries::from_ints({1, 2, 3});
  const auto b = QSeries::from_ints({1, 2, 4});
  CHECK(first_mismatch(a, b, 3) == 2);
  CHECK_FALSE(first_mismatch(a, b, 2).has_value());
  CHECK_THROWS_AS(first_mismatch(a, b, 4), TruncationError);
}

TEST_CASE("multimodular product agrees with the schoolbook product") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(1, 400);
  std::uniform_int_distribution<int> digits(1, 120);
  for (int round = 0; round < 20; ++round) {
    auto make = [&](int n) {
      std::vector<Int> c(static_cast<std::size_t>(n));
      for (auto& v : c) {
        std::string s(1, static_cast<char>('1' + rng() % 9));
        const int d = digits(rng);
        for (int i = 0; i < d; ++i) s.push_back(static_cast<char>('0' + rng() % 10));
        v = Int(s);
        if (rng() % 2) v = -v;
      }
      return QSeries(static_cast<std::int64_t>(rng() % 3), std::move(c));
    };
    const auto a = make(len(rng));
    const auto b = make(len(rng));
    const auto ref = detail::mul_schoolbook(a, b);
    const auto fast = detail::mul_multimodular(a, b);
    CHECK(ref.offset() == fast.offset());
    CHECK(ref.trunc() == fast.trunc());
    CHECK(ref == fast);
    CHECK(mul(a, b) == ref);
  }
}
