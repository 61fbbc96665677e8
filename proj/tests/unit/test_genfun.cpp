#include <doctest.h>

#include "oracles.hpp"
#include "qcong/genfun.hpp"

using namespace qcong;

TEST_CASE("Euler product against repeated factor multiplication") {
  const std::int64_t N = 2000;
  const auto fast = euler_product(N);
  const auto slow = oracle::direct_product(1, 1, N);
  REQUIRE(fast.trunc() == N);
  for (std::int64_t n = 0; n < N; ++n) REQUIRE(fast.at(n) == slow[n]);
}

TEST_CASE("partition numbers against two independent recurrences") {
  const std::int64_t N = 1500;
  const auto p = partition_series(N);
  const auto parts = oracle::partitions_by_parts(N);
  const auto euler = oracle::partitions_euler(N);
  for (std::int64_t n = 0; n < N; ++n) {
    REQUIRE(p.at(n) == parts[n]);
    REQUIRE(p.at(n) == euler[n]);
  }
  CHECK(partition_number(47) == 124754);
  CHECK(partition_number(100) == Int("190569292"));
  CHECK(partition_number(1000) == Int("24061467864032622473692149727991"));
}

TEST_CASE("brute-force enumeration matches the generating functions") {
  const auto p = expand_named("partition", 41);
  const auto d = expand_named("distinct", 41);
  const auto w = expand_named("mock_omega", 41);
  for (unsigned n = 0; n <= 40; ++n) {
    CHECK(p.at(n) == brute_force_count(n, PartitionPredicate::all));
    CHECK(d.at(n) == brute_force_count(n, PartitionPredicate::distinct));
    if (n >= 1) CHECK(w.at(n) == brute_force_count(n, PartitionPredicate::omega));
  }
  CHECK(w.at(0) == 0);
  CHECK_THROWS_AS(brute_force_count(kBruteForceLimit + 1, PartitionPredicate::all), std::invalid_argument);
}

TEST_CASE("j-invariant opening coefficients") {
  const auto j = expand_named("jinvariant", 6);
  CHECK(j.offset() == -1);
  CHECK(j.at(-1) == 1);
  CHECK(j.at(0) == 744);
  CHECK(j.at(1) == 196884);
  CHECK(j.at(2) == 21493760);
  CHECK(j.at(3) == 864299970);
}

TEST_CASE("eta quotient prefactors") {
  const EtaQuotient t({{5, 6}, {1, -6}});
  CHECK(t.prefactor24() == 24);
  CHECK(t.integral_with(0));
  const auto ts = expand_eta_quotient(t, 0, 8);
  const std::vector<long> open = {0, 1, 6, 27, 98, 315, 912, 2456};
  for (std::int64_t n = 0; n < 8; ++n) CHECK(ts.at(n) == open[n]);
  const EtaQuotient eta({{1, 1}});
  CHECK_FALSE(eta.integral_with(0));
  CHECK_THROWS_AS(expand_eta_quotient(eta, 0, 5), std::domain_error);
  CHECK(expand_eta_quotient(eta, -1, 5) == euler_product(5));
  CHECK_THROWS(EtaQuotient({{1, 1}}, 2));
}

TEST_CASE("product expansion with mixed exponents") {
  const std::int64_t N = 300;
  const auto mixed = product_expansion({{5, 6}, {1, -6}}, N);
  const auto ref = oracle::times(oracle::direct_product(5, 6, N), oracle::direct_product(1, -6, N), N);
  for (std::int64_t n = 0; n < N; ++n) REQUIRE(mixed.at(n) == ref[n]);
}

TEST_CASE("Eisenstein series") {
  const auto e2 = eisenstein(EisensteinKind::E2, 5);
  const auto e4 = eisenstein(EisensteinKind::E4, 5);
  CHECK(e2.at(1) == -24);
  CHECK(e2.at(4) == -24 * 7);
  CHECK(e4.at(2) == 240 * 9);
  CHECK(e4.at(3) == 240 * 28);
}

TEST_CASE("catalog entries") {
  CHECK(expand_named("colored(1)", 200) == partition_series(200));
  const auto c2 = expand_named("colored(2)", 6);
  const std::vector<long> two = {1, 2, 5, 10, 20, 36};
  for (std::int64_t n = 0; n < 6; ++n) CHECK(c2.at(n) == two[n]);
  const auto wy = expand_named("wangyang", 200);
  CHECK(wy.at(0) == 1);
  CHECK(wy.offset() >= 0);
  CHECK(is_catalog_name("elongated(3)"));
  CHECK_FALSE(is_catalog_name("nonsense"));
  CHECK_THROWS_AS(expand_named("nonsense", 5), std::invalid_argument);
  CHECK_THROWS_AS(expand_named("colored(x)", 5), std::invalid_argument);
  CHECK(expand_named("frobenius2", 4).at(0) == 1);
}
