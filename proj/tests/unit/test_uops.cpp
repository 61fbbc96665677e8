#include <doctest.h>

#include <random>

#include "qcong/genfun.hpp"
#include "qcong/uops.hpp"

using namespace qcong;

namespace {

TPolynomial poly(std::initializer_list<std::pair<unsigned, long>> terms) {
  std::map<unsigned, Rat> m;
  for (auto [k, v] : terms) m[k] = Rat(v);
  return TPolynomial(m);
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const auto a = poly({{1, 2}, {3, -1}});
  const auto b = poly({{1, -2}, {2, 5}});
  CHECK((a + b) == poly({{2, 5}, {3, -1}}));
  CHECK((a - a).is_zero());
  CHECK((a * b).coefficient(3) == 10);
  CHECK((a * b).coefficient(4) == 2);
  CHECK((a * b).degree() == 5u);
  CHECK(a.scaled(Rat(1, 2)).coefficient(1) == 1);
  CHECK_FALSE(a.scaled(Rat(1, 3)).is_integral());
  CHECK(a.to_string().find("t^3") != std::string::npos);
}

TEST_CASE("U5 of the Hauptmodul opens 315, 34390, 1382880") {
  const auto t = hauptmodul_t(20);
  const auto u = u5_plain(t);
  CHECK(u.trunc() == 4);
  CHECK(u.at(0) == 0);
  CHECK(u.at(1) == 315);
  CHECK(u.at(2) == 34390);
  CHECK(u.at(3) == 1382880);
}

TEST_CASE("decomposition round trip") {
  std::mt19937_64 rng(5);
  const std::int64_t N = 40;
  const auto t = hauptmodul_t(N);
  for (int round = 0; round < 30; ++round) {
    std::map<unsigned, Rat> m;
    const unsigned deg = 1 + static_cast<unsigned>(rng() % 12);
    for (unsigned k = 1; k <= deg; ++k) m[k] = Rat(static_cast<long>(rng() % 2001) - 1000);
    const TPolynomial f(m);
    const auto series = f.evaluate(t, N);
    CHECK(decompose_in_t(series) == f);
  }
  CHECK_THROWS_AS(decompose_in_t(partition_series(30)), std::domain_error);
}

TEST_CASE("U5 commutes with multiplication by a series in q^5") {
  const std::int64_t N = 400;
  const auto f = partition_series(N / 5);
  const auto g = hauptmodul_t(N);
  const auto lhs = u5_plain(substitute_power(f, 5) * g);
  const auto rhs = f * u5_plain(g);
  const auto upto = std::min(lhs.trunc(), rhs.trunc());
  CHECK_FALSE(first_mismatch(lhs, rhs, upto).has_value());
}

TEST_CASE("ladder λ values") {
  const std::vector<std::int64_t> expected = {4, 24, 99, 599};
  for (unsigned a = 1; a <= 4; ++a) CHECK(ladder_lambda(a) == expected[a - 1]);
  for (unsigned a = 1; a <= 6; ++a) {
    std::int64_t mod = 1;
    for (unsigned i = 0; i < a; ++i) mod *= 5;
    std::int64_t brute = 1;
    while ((24 * brute) % mod != 1) ++brute;
    CHECK(ladder_lambda(a) == brute);
  }
}

TEST_CASE("ladder opening terms") {
  const std::int64_t N = 200;
  const auto t = hauptmodul_t(N);
  CHECK(ladder_term(1, N) == scale(t, Int(5)));
  const auto l2 = decompose_in_t(ladder_term(2, 60));
  CHECK(l2 == poly({{1, 1575}, {2, 162500}, {3, 4921875}, {4, 58593750}, {5, 244140625}}));
  for (unsigned a = 1; a <= 3; ++a) {
    const auto rep = ladder_step_check(a, 100);
    CHECK_MESSAGE(rep.passed, rep.detail);
  }
  const auto broken = ladder_step_check(2, 100, QSeries::one(500));
  CHECK_FALSE(broken.passed);
  CHECK_THROWS_AS(ladder_term(4, 100, 1000), BudgetError);
}

TEST_CASE("modular equation recovery") {
  const auto eq = recover_modular_equation(200);
  CHECK(eq.a[0] == poly({{1, -1}}));
  CHECK(eq.a[1] == poly({{1, -30}, {2, -125}}));
  CHECK(eq.a[2] == poly({{1, -315}, {2, -3750}, {3, -15625}}));
  CHECK(eq.a[3] == poly({{1, -1300}, {2, -39375}, {3, -468750}, {4, -1953125}}));
  CHECK(eq.a[4] == poly({{1, -1575}, {2, -162500}, {3, -4921875}, {4, -58593750}, {5, -244140625}}));
  CHECK_FALSE(modular_equation_residual(eq, 200).has_value());
  CHECK_FALSE(modular_equation_residual(recover_modular_equation(500), 500).has_value());
  const auto printed = printed_modular_equation();
  for (unsigned j : {0u, 2u, 3u}) CHECK(printed[j] == eq.a[j]);
  const auto diffs = compare_with_printed(eq);
  CHECK_FALSE(diffs.empty());
  for (const auto& d : diffs) CHECK((d.j == 1 || d.j == 4));
  CHECK_THROWS(recover_modular_equation(40));
}

TEST_CASE("power tables: direct and recurrence agree") {
  for (unsigned parity : {0u, 1u}) {
    const auto table = u5_power_table(parity, 10);
    CHECK(table.agree());
    CHECK(table.direct.size() == 11);
  }
  const auto t1 = u5_power_table(1, 6);
  CHECK(t1.direct[1].coefficient(1) == 315);
  CHECK(t1.direct[1].degree() == 5u);
  CHECK(t1.direct[1].coefficient(5) == 48828125);
  const auto t = hauptmodul_t(t1.trunc);
  const auto image = u5_plain(hauptmodul_t(5 * t1.trunc));
  CHECK(to_integral(t1.direct[1].evaluate(t, t1.trunc)).value() == image.truncated(t1.trunc));
  CHECK(t1.direct[0] == poly({{0, 1}}));
  const auto t0 = u5_power_table(0, 6);
  CHECK(t0.direct[0] == poly({{1, 5}}));
}

TEST_CASE("valuation ledger") {
  for (unsigned parity : {0u, 1u}) {
    const auto rep = valuation_pattern_check(parity, 10);
    CHECK(rep.passed);
    CHECK_FALSE(rep.cells.empty());
  }
  CHECK(theta(0, 1) == 2);
  CHECK(theta(1, 1) == 2);
  CHECK(theta(1, 2) == 4);
  CHECK_FALSE(ledger_membership(poly({{1, 1}}), 1).member);
  CHECK(ledger_membership(poly({{1, 25}, {2, 625}}), 1).member);
  CHECK_FALSE(ledger_membership(poly({{0, 25}}), 1).member);

  std::mt19937_64 rng(3);
  const auto table = u5_power_table(1, 12);
  for (int i = 0; i < 10; ++i) {
    const auto f = random_ledger_member(1, 12, rng);
    CHECK(ledger_membership(f, 1).member);
    const auto rep = vspace_stability_check(table, f);
    CHECK(rep.precondition_ok);
    CHECK(rep.stable);
  }
}
