// Acceptance runner: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../unit/oracles.hpp"
#include "qcong/genfun.hpp"
#include "qcong/hrr.hpp"
#include "qcong/uops.hpp"
#include "qcong/verify.hpp"

using namespace qcong;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!passed) note << "; ";
      note << what;
      passed = false;
    }
  }
};

using Criterion = std::function<void(Outcome&)>;

// 1. Partition oracle.
void partitions(Outcome& o) {
  const auto p = expand_named("partition", 41);
  for (unsigned n = 0; n <= 40; ++n) {
    if (p.at(n) != brute_force_count(n, PartitionPredicate::all)) o.require(false, "brute force differs at " + std::to_string(n));
  }
  const std::vector<long> listing = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627};
  for (std::size_t n = 0; n < listing.size(); ++n) {
    if (p.at(static_cast<std::int64_t>(n)) != listing[n]) o.require(false, "listing differs at " + std::to_string(n));
  }
}

// 2. Generating function of p(5n+4).
void p5n4(Outcome& o) {
  const auto rep = verify_identity("p5n4", 500);
  o.require(rep.passed, "identity fails at N = 500");
  const auto lhs = extract_progression(partition_series(2500), 5, 4);
  o.require(lhs.at(0) == 5 && lhs.at(1) == 30 && lhs.at(2) == 135, "opening coefficients");
}

// 3. Ladder.
void ladder(Outcome& o) {
  const auto t = hauptmodul_t(500);
  o.require(ladder_term(1, 500) == scale(t, Int(5)), "L1 != 5t");
  for (unsigned a = 1; a <= 3; ++a) {
    const auto rep = ladder_step_check(a, 100);
    o.require(rep.passed, "step " + std::to_string(a) + ": " + rep.detail);
  }
  for (unsigned a = 1; a <= 4; ++a) {
    const auto v = series_valuation(ladder_term(a, 100), 5);
    o.require(v.has_value() && *v >= a, "valuation of L" + std::to_string(a));
  }
}

// 4. Modular equation.
void modular_equation(Outcome& o) {
  const auto eq = recover_modular_equation(500);
  o.require(!modular_equation_residual(eq, 500).has_value(), "residual nonzero");
  const auto printed = printed_modular_equation();
  for (unsigned j : {0u, 2u, 3u}) o.require(printed[j] == eq.a[j], "a" + std::to_string(j) + " differs from print");
  o.note << "a0 = " << eq.a[0].to_string();
  for (const auto& d : compare_with_printed(eq)) {
    o.require(d.j == 1 || d.j == 4, "unexpected discrepancy in a" + std::to_string(d.j));
    o.note << "; a" << d.j << "[t^" << d.power << "] printed " << d.printed << ", recovered " << d.recovered;
  }
}

// 5. Valuation ledger.
void valuations(Outcome& o) {
  std::mt19937_64 rng(20240601);
  for (unsigned parity : {0u, 1u}) {
    const auto table = u5_power_table(parity, 15);
    o.require(table.agree(), "table recurrence disagrees");
    o.require(valuation_pattern_check(table).passed, "pattern fails for parity " + std::to_string(parity));
    for (int i = 0; i < 50; ++i) {
      const auto f = random_ledger_member(parity, 15, rng);
      const auto rep = vspace_stability_check(table, f);
      if (!(rep.precondition_ok && rep.stable)) o.require(false, "unstable sample, parity " + std::to_string(parity));
    }
  }
}

// 6. Congruence families at depth.
void families(Outcome& o) {
  VerifyOptions opt;
  opt.samples = 25;
  opt.jobs = 4;
  for (const auto& f : family_catalog()) {
    if (f.source == "jinvariant" && family_required_index(f, f.default_alpha_max, 25) > 10'000) {
      o.require(false, f.name + " exceeds the 10^4 budget");
    }
  }
  CoefficientCache cache;
  for (const auto& rep : verify_families(family_catalog(), opt, cache)) {
    o.require(rep.passed(), rep.family + " fails");
  }
  o.note << family_catalog().size() << " families";
}

// 7. Eigenfunction.
void eigen(Outcome& o) {
  const auto s = make_eigen_setup(100);
  const auto rep = eigen_check(s, 100);
  o.require(rep.opening_matches, "opening q^2 + 9q^3 + 50q^4 + 219q^5");
  o.require(rep.fixed_mod_p, "not fixed mod 5");
  o.require(rep.nonzero_mod_p, "zero mod 5");
}

// 8. Identity for p(11n + 6) data.
void p11n6(Outcome& o) {
  const auto rep = verify_identity("p11n6", 200);
  o.require(rep.passed, "identity fails");
  for (const auto& c : rep.checks) o.require(c.passed, c.name);
}

// 9. Rademacher series, Dedekind sums, eta transformation.
void hrr(Outcome& o) {
  const auto p = oracle::partitions_euler(2001);
  std::vector<std::int64_t> panel;
  for (std::int64_t n = 1; n <= 50; ++n) panel.push_back(n);
  for (std::int64_t n : {100, 500, 1000, 2000}) panel.push_back(n);
  double worst = 0;
  for (auto n : panel) {
    const auto ev = hrr_p(n);
    o.require(ev.rounded == p[n], "p(" + std::to_string(n) + ")");
    o.require(ev.residual < 1e-3, "residual at " + std::to_string(n));
    worst = std::max(worst, ev.residual);
  }
  o.require(hrr_p(5).rounded == 7 && hrr_p(20).rounded == 627, "p(5), p(20)");
  std::mt19937_64 rng(1729);
  for (int done = 0; done < 200;) {
    const std::int64_t h = 1 + static_cast<std::int64_t>(rng() % 1000);
    const std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 1000);
    if (std::gcd(h, k) != 1) continue;
    Rat rhs(Int(h * h + k * k + 1), Int(h * k));
    rhs.canonicalize();
    rhs = (rhs - 3) / 12;
    if (dedekind_sum(DedekindSumArgs(h, k)) + dedekind_sum(DedekindSumArgs(k, h)) != rhs) o.require(false, "reciprocity");
    ++done;
  }
  for (const auto& g : eta_panel()) {
    const auto rep = check_eta_transformation(g, {Real("0.1"), Real("1.1")}, 128);
    o.require(rep.relative_error_double < 1e-20, "eta transformation: " + rep.branch);
  }
  o.note << "worst residual " << worst;
}

// 10. Series kernel properties.
void properties(Outcome& o) {
  std::mt19937_64 rng(31337);
  auto series = [&](std::int64_t len, bool unit) {
    std::vector<Int> c(static_cast<std::size_t>(len));
    for (auto& v : c) v = static_cast<long>(rng() % 200001) - 100000;
    if (unit) c[0] = rng() % 2 ? 1 : -1;
    return QSeries(0, std::move(c));
  };
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto a = series(1 + rng() % 30, false), b = series(1 + rng() % 30, false), c = series(1 + rng() % 30, false);
    const auto l = a * (b + c), r = a * b + a * c;
    if (!(a * b == b * a) || !((a * b) * c == a * (b * c)) || !(l == r) || !(a + b == b + a)) ++failures;
  }
  o.require(failures == 0, std::to_string(failures) + " ring-axiom failures");
  failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::int64_t len = 1 + static_cast<std::int64_t>(rng() % 30);
    const auto u = series(len, true);
    if (!(u * invert(u) == QSeries::one(len))) ++failures;
  }
  o.require(failures == 0, std::to_string(failures) + " inverse failures");
  failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto a = series(1 + rng() % 30, false);
    const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 7);
    const auto back = extract_progression(substitute_power(a, m), m, 0);
    if (back.trunc() != a.trunc() || !(back == a)) ++failures;
  }
  o.require(failures == 0, std::to_string(failures) + " round-trip failures");
  o.note << (o.passed ? "3 x 1000 cases" : "");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Criterion>> criteria = {
      {"partition oracle", partitions},
      {"p(5n+4) generating function", p5n4},
      {"ladder", ladder},
      {"modular equation", modular_equation},
      {"valuation ledger", valuations},
      {"congruence families", families},
      {"mod-5 eigenfunction", eigen},
      {"p(11n+6) identity", p11n6},
      {"Rademacher series and eta", hrr},
      {"series kernel properties", properties},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.passed) ++failed;
    std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << index << ". " << name << " (" << secs << " s)";
    const auto note = o.note.str();
    if (!note.empty()) std::cout << ": " << note;
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
