#include <doctest.h>

#include "qcong/genfun.hpp"
#include "qcong/report.hpp"
#include "qcong/verify.hpp"

using namespace qcong;

TEST_CASE("catalog lookup") {
  CHECK(find_family("ram5").prime == 5);
  CHECK_THROWS_AS(find_family("nope"), std::invalid_argument);
  CHECK(family_names().find("andrews_paule") != std::string::npos);
  const auto& ram7 = find_family("ram7");
  CHECK(ram7.exponent(1) == 1);
  CHECK(ram7.exponent(2) == 2);
  CHECK(ram7.exponent(3) == 2);
}

TEST_CASE("family indices satisfy the condition") {
  const auto& f = find_family("ram5");
  const auto idx = family_indices(f, 2, 5);
  const std::vector<std::int64_t> expected = {24, 49, 74, 99, 124};
  CHECK(idx == expected);
  const auto& j = find_family("j5");
  CHECK(family_indices(j, 1, 2).front() == 5);
}

TEST_CASE("small families pass and report valuations") {
  VerifyOptions opt;
  opt.alpha_max = 2;
  const auto rep = verify_family(find_family("ram5"), opt);
  REQUIRE(rep.records.size() == 2);
  CHECK(rep.passed());
  CHECK_FALSE(rep.partial);
  CHECK(rep.records[1].modulus == 25);
  CHECK(rep.records[1].checked == 25);
  CHECK(rep.records[1].min_valuation >= 2u);
}

TEST_CASE("a corrupted coefficient is caught and confirmed by a fresh recheck") {
  CoefficientCache cache;
  VerifyOptions opt;
  opt.alpha_max = 1;
  cache.ensure("partition", 200);
  cache.corrupt("partition", 4, Int(1));
  const auto& f = find_family("ram5");
  const auto rep = verify_family(f, opt, cache);
  CHECK_FALSE(rep.passed());
  REQUIRE(rep.records.front().witness.has_value());
  CHECK(*rep.records.front().witness == 4);
  CHECK(recheck_divisible(f, 1, 4));
}

TEST_CASE("budget exhaustion yields a partial report") {
  VerifyOptions opt;
  opt.alpha_max = 4;
  opt.budget = 1000;
  const auto rep = verify_family(find_family("ram5"), opt);
  CHECK(rep.partial);
  CHECK(rep.records.back().skipped);
  CHECK_FALSE(rep.passed());
}

TEST_CASE("parallel runs are deterministic") {
  VerifyOptions opt;
  opt.alpha_max = 2;
  const std::vector<CongruenceFamily> fams = {find_family("ram5"), find_family("ram7"), find_family("tang"),
                                              find_family("j7")};
  CoefficientCache c1, c4;
  const auto serial = verify_families(fams, opt, c1);
  opt.jobs = 4;
  const auto parallel = verify_families(fams, opt, c4);
  CHECK(families_document(serial).dump() == families_document(parallel).dump());
}

TEST_CASE("JSON reports round-trip") {
  VerifyOptions opt;
  opt.alpha_max = 2;
  const auto rep = verify_family(find_family("andrews_sellers"), opt);
  const auto j = to_json(rep);
  CHECK(to_json(family_report_from_json(j)) == j);
  SuiteReport s{"demo", {{"a", true, "fine"}, {"b", false, "off by one"}}};
  const auto sj = to_json(s);
  CHECK(to_json(suite_report_from_json(sj)) == sj);
  CHECK_FALSE(s.passed());
  const auto doc = suites_document({s});
  CHECK(doc.at("schema_version") == 1);
  CHECK(to_text(s).find("off by one") != std::string::npos);
}

TEST_CASE("identities") {
  for (const auto& [name, N] : std::vector<std::pair<std::string, std::int64_t>>{
           {"p5n4", 200}, {"p5n4_in_t", 200}, {"p11n6", 100}}) {
    const auto rep = verify_identity(name, N);
    CHECK_MESSAGE(rep.passed, name);
    CHECK_FALSE(rep.first_mismatch.has_value());
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.passed, c.name << ": " << c.details);
  }
  CHECK_THROWS(verify_identity("nope", 10));
}

TEST_CASE("eigenfunction detection") {
  const auto s = make_eigen_setup(40);
  const auto rep = eigen_check(s, 40);
  CHECK(rep.opening_matches);
  CHECK(rep.eigenfunction());
  CHECK_FALSE(eigen_detect(s, s.x, 40).eigenfunction());
  CHECK_FALSE(eigen_check(make_eigen_setup(40, EigenWeight::series_ratio_5), 40).eigenfunction());
}
