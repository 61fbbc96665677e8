#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "qcong/genfun.hpp"
#include "qcong/hrr.hpp"
#include "qcong/uops.hpp"

namespace qcong::cli {

namespace {

std::int64_t or_default(std::int64_t v, std::int64_t d) { return v > 0 ? v : d; }

void require_budget(std::int64_t need, const RunConfig& cfg, const std::string& what) {
  if (need > cfg.budget) {
    throw ConfigError(fmt::format("{} needs coefficient index {}, beyond --budget {}", what, need, cfg.budget));
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------

SuiteReport ladder_suite(const RunConfig& cfg) {
  const std::int64_t N = or_default(cfg.trunc, 100);
  const unsigned amax = cfg.alpha_max ? cfg.alpha_max : 3;
  require_budget(std::max(ladder_required_index(amax, 5 * N), ladder_required_index(amax + 1, N)), cfg,
                 "ladder suite");
  SuiteReport rep{"ladder", {}};

  const std::int64_t n1 = 5 * N;
  const bool l1 = ladder_term(1, n1, cfg.budget) == scale(hauptmodul_t(n1), Int(5));
  rep.checks.push_back({"L_1 = 5t", l1, fmt::format("to q^{}", n1)});

  for (unsigned a = 1; a <= amax + 1; ++a) {
    const std::int64_t lam = ladder_lambda(a);
    std::int64_t mod = 1;
    for (unsigned i = 0; i < a; ++i) mod *= 5;
    std::int64_t brute = 1;
    while ((24 * brute) % mod != 1) ++brute;
    rep.checks.push_back({fmt::format("lambda_{}", a), lam == brute && lam > 0 && lam < mod,
                          fmt::format("lifted {}, direct search {}", lam, brute)});
  }
  for (unsigned a = 1; a <= amax; ++a) {
    const StepReport s = ladder_step_check(a, N, std::nullopt, cfg.budget);
    rep.checks.push_back({fmt::format("U5^({0})(L_{0}) = L_{1}", a, a + 1), s.passed, s.detail});
  }
  for (unsigned a = 1; a <= amax + 1; ++a) {
    const auto v = series_valuation(ladder_term(a, N, cfg.budget), 5);
    rep.checks.push_back({fmt::format("nu_5(L_{}) >= {}", a, a), v && *v >= a,
                          fmt::format("observed {}", v ? std::to_string(*v) : std::string("inf"))});
  }
  const TPolynomial d2 = decompose_in_t(ladder_term(2, N, cfg.budget));
  bool div25 = d2.is_integral() && !d2.is_zero();
  for (const auto& [m, c] : d2.coeffs()) div25 = div25 && *valuation(c, 5) >= 2;
  rep.checks.push_back({"L_2 in 25 Z[t]", div25, "L_2 = " + d2.to_string()});

  const std::int64_t na = std::min<std::int64_t>(N, 50);
  const StepReport bad = ladder_step_check(2, na, QSeries::one(5 * na), cfg.budget);
  rep.checks.push_back({"weight 1 in place of A breaks the weighted step", !bad.passed, bad.detail});
  return rep;
}

std::string poly_or_zero(const TPolynomial& p) { return p.is_zero() ? "0" : p.to_string(); }

SuiteReport modular_equation_suite(const RunConfig& cfg) {
  const std::int64_t N = or_default(cfg.trunc, 500);
  SuiteReport rep{"modular-equation", {}};
  const ModularEquation eq = recover_modular_equation(N);
  rep.checks.push_back({"relation annihilates t", eq.verified_to == N, fmt::format("verified to q^{}", N)});
  const auto printed = printed_modular_equation();
  for (unsigned j = 0; j < 5; ++j) {
    const bool same = eq.a[j] == printed[j];
    const std::string name = fmt::format("a_{} recovered", j);
    if (j == 1 || j == 4) {
      rep.checks.push_back({name, true,
                            fmt::format("{} (printed: {}{})", poly_or_zero(eq.a[j]), poly_or_zero(printed[j]),
                                        same ? "" : ", differs")});
    } else {
      rep.checks.push_back({fmt::format("a_{} matches printed value", j), same,
                            fmt::format("recovered {}; printed {}", poly_or_zero(eq.a[j]), poly_or_zero(printed[j]))});
    }
  }
  for (const auto& d : compare_with_printed(eq)) {
    rep.checks.push_back({fmt::format("discrepancy a_{} t^{}", d.j, d.power), true,
                          fmt::format("printed {}, recovered {}", d.printed.get_str(), d.recovered.get_str())});
  }
  return rep;
}

SuiteReport valuations_suite(const RunConfig& cfg) {
  const unsigned m_max = cfg.m_max;
  SuiteReport rep{"valuations", {}};
  const ModularEquation eq = recover_modular_equation(200);
  std::mt19937_64 rng(20240601);
  const unsigned sample_degree = std::min(10u, m_max);
  for (unsigned i = 0; i < 2; ++i) {
    const PowerTable table = u5_power_table(i, m_max, cfg.trunc, &eq);
    rep.checks.push_back({fmt::format("parity {}: recurrence = direct for m <= {}", i, m_max), table.agree(),
                          table.agree() ? "" : fmt::format("first disagreement at m = {}", *table.first_disagreement)});
    const PatternReport pr = valuation_pattern_check(table);
    std::string bad;
    for (const auto& c : pr.cells) {
      if (!c.passed && bad.empty()) bad = fmt::format("m={} r={}: {}", c.m, c.r, c.reason);
    }
    rep.checks.push_back({fmt::format("parity {}: valuation pattern", i), pr.passed,
                          pr.passed ? fmt::format("{} cells", pr.cells.size()) : bad});
    int stable = 0;
    std::string first_bad;
    const int samples = 50;
    for (int s = 0; s < samples; ++s) {
      const StabilityReport st = vspace_stability_check(table, random_ledger_member(i, sample_degree, rng));
      if (st.precondition_ok && st.stable) ++stable;
      else if (first_bad.empty()) first_bad = st.precondition_ok ? st.image_membership.reason : st.input.reason;
    }
    rep.checks.push_back({fmt::format("parity {}: (1/5) U5 maps V({}) into V({})", i, i, 1 - i), stable == samples,
                          fmt::format("{}/{} samples{}", stable, samples, first_bad.empty() ? "" : "; " + first_bad)});
  }
  const TPolynomial seed = decompose_in_t(ladder_term(1, 40)).scaled(Rat(1, 5));
  const Membership m1 = ledger_membership(seed, 1);
  rep.checks.push_back({"seed L_1/5 = t against V(1) as defined", true,
                        fmt::format("L_1/5 = {}; member: {} ({})", seed.to_string(), yes_no(m1.member), m1.reason)});
  return rep;
}

SuiteReport eigen_suite(const RunConfig& cfg) {
  const std::int64_t N = or_default(cfg.trunc, 100);
  SuiteReport rep{"eigen", {}};
  const EigenSetup s = make_eigen_setup(N);
  const EigenReport e = eigen_check(s, N);
  rep.checks.push_back({"t = y + 4xy opens q^2 + 9q^3 + 50q^4 + 219q^5", e.opening_matches, to_string(s.t, 6)});
  rep.checks.push_back({"U(0) o U(1) (t) = t mod 5", e.fixed_mod_p,
                        e.first_mismatch ? fmt::format("first mismatch at q^{}", *e.first_mismatch)
                                         : fmt::format("to q^{}", N)});
  rep.checks.push_back({"t != 0 mod 5", e.nonzero_mod_p, ""});
  const EigenReport ex = eigen_detect(s, s.x, N);
  rep.checks.push_back({"detector verdict on x", true, fmt::format("x eigenfunction mod 5: {}", yes_no(ex.eigenfunction()))});
  const EigenSetup lit = make_eigen_setup(N, EigenWeight::series_ratio_5);
  const EigenReport el = eigen_detect(lit, lit.t, N);
  rep.checks.push_back({"weight CPhi2(q)/CPhi2(q^5) instead", true,
                        fmt::format("t eigenfunction mod 5 under that weight: {}", yes_no(el.eigenfunction()))});
  return rep;
}

SuiteReport identities_suite(const RunConfig& cfg) {
  SuiteReport rep{"identities", {}};
  const std::vector<std::pair<std::string, std::int64_t>> plan = {
      {"p5n4", or_default(cfg.trunc, 500)}, {"p5n4_in_t", or_default(cfg.trunc, 500)}, {"p11n6", or_default(cfg.trunc, 200)}};
  for (const auto& [name, N] : plan) {
    const IdentityReport r = verify_identity(name, N);
    for (const auto& c : r.checks) rep.checks.push_back({name + ": " + c.name, c.passed, c.details});
  }
  return rep;
}

SuiteReport hrr_suite(const RunConfig& cfg) {
  SuiteReport rep{"hrr", {}};
  std::vector<std::int64_t> panel;
  if (cfg.n) {
    panel.push_back(*cfg.n);
  } else {
    for (std::int64_t n = 1; n <= 50; ++n) panel.push_back(n);
    panel.insert(panel.end(), {100, 500, 1000, 2000});
  }
  require_budget(*std::max_element(panel.begin(), panel.end()), cfg, "hrr suite");
  int matched = 0;
  double worst = 0;
  std::string first_bad;
  for (std::int64_t n : panel) {
    const HRREvaluation ev = hrr_p(n);
    const bool ok = ev.rounded == partition_number(n) && ev.residual < 1e-3;
    worst = std::max(worst, ev.residual);
    if (ok) ++matched;
    else if (first_bad.empty()) first_bad = fmt::format("; n={} gave {} (residual {:.3g})", n, ev.rounded.get_str(), ev.residual);
    if (cfg.n) rep.checks.push_back({fmt::format("p({}) = {}", n, ev.rounded.get_str()), ok,
                                     fmt::format("K={}, {} bits, residual {:.3g}", ev.terms_used, ev.precision_bits, ev.residual)});
  }
  if (!cfg.n) {
    rep.checks.push_back({"rounded series matches the recurrence", matched == static_cast<int>(panel.size()),
                          fmt::format("{}/{} values, worst residual {:.3g}{}", matched, panel.size(), worst, first_bad)});
  }

  std::mt19937_64 rng(1729);
  std::uniform_int_distribution<std::int64_t> dist(1, 500);
  int pairs = 0, good = 0;
  while (pairs < 200) {
    const std::int64_t h = dist(rng), k = dist(rng);
    if (std::gcd(h, k) != 1) continue;
    ++pairs;
    const Rat lhs = dedekind_sum(DedekindSumArgs(h, k)) + dedekind_sum(DedekindSumArgs(k, h));
    Rat rhs = Rat(Int(h), Int(k)) + Rat(Int(k), Int(h)) + Rat(Int(1), Int(h * k));
    rhs.canonicalize();
    rhs = Rat(-1, 4) + rhs / 12;
    if (lhs == rhs) ++good;
  }
  rep.checks.push_back({"Dedekind reciprocity", good == pairs, fmt::format("{}/{} random pairs", good, pairs)});

  const ComplexReal tau{Real("0.1"), Real("1.1")};
  for (const auto& g : eta_panel()) {
    const EtaTransformReport r = check_eta_transformation(g, tau, 128);
    rep.checks.push_back({fmt::format("eta transformation ({},{};{},{})", g.a, g.b, g.c, g.d), r.relative_error_double < 1e-20,
                          fmt::format("relative error {:.3g}", r.relative_error_double)});
  }
  return rep;
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out_path);
  if (!f) throw ConfigError("cannot open output file " + cfg.out_path);
  f << text;
}

int run_expand(const RunConfig& cfg, std::ostream& out) {
  const std::int64_t N = cfg.trunc;
  if (N < 1) throw ConfigError("expand: N must be positive");
  require_budget(N, cfg, "expand");
  if (!is_catalog_name(cfg.target)) {
    throw ConfigError("unknown series '" + cfg.target + "'; valid names: " + catalog_names());
  }
  const QSeries s = expand_named(cfg.target, N);
  const std::int64_t lo = std::min<std::int64_t>(s.offset(), 0);
  if (cfg.output == "json") {
    nlohmann::json coeffs = nlohmann::json::array();
    for (std::int64_t e = lo; e < lo + N; ++e) coeffs.push_back(s.at(e).get_str());
    nlohmann::json doc = {{"schema_version", kReportSchemaVersion}, {"kind", "expansion"}, {"name", cfg.target},
                          {"offset", lo}, {"coefficients", coeffs}};
    emit(cfg, out, doc.dump(2) + "\n");
  } else {
    std::string text;
    for (std::int64_t e = lo; e < lo + N; ++e) text += fmt::format("{} {}\n", e, s.at(e).get_str());
    emit(cfg, out, text);
  }
  return kExitPass;
}

int run_verify_family(const RunConfig& cfg, std::ostream& out) {
  std::vector<CongruenceFamily> fs;
  if (cfg.target == "all") {
    fs = family_catalog();
  } else {
    try {
      fs.push_back(find_family(cfg.target));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  VerifyOptions opt;
  opt.alpha_max = cfg.alpha_max;
  opt.samples = cfg.samples;
  opt.budget = cfg.budget;
  opt.jobs = cfg.jobs;
  for (const auto& f : fs) {
    const unsigned amax = opt.alpha_max ? opt.alpha_max : f.default_alpha_max;
    require_budget(family_required_index(f, amax, opt.samples), cfg, "family " + f.name);
  }
  CoefficientCache cache;
  if (cfg.inject_fault) {
    for (const auto& f : fs) {
      cache.ensure(f.source, *cfg.inject_fault);
      cache.corrupt(f.source, *cfg.inject_fault, Int(1));
    }
  }
  const auto reports = verify_families(fs, opt, cache);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (cfg.output == "json") {
    emit(cfg, out, families_document(reports).dump(2) + "\n");
  } else {
    std::string text;
    for (const auto& r : reports) text += to_text(r);
    text += ok ? "RESULT PASS\n" : "RESULT FAIL\n";
    emit(cfg, out, text);
  }
  return ok ? kExitPass : kExitFail;
}

int run_suite_command(const RunConfig& cfg, std::ostream& out) {
  const SuiteReport rep = run_suite(cfg.target, cfg);
  if (cfg.output == "json") {
    emit(cfg, out, suites_document({rep}).dump(2) + "\n");
  } else {
    emit(cfg, out, to_text(rep) + (rep.passed() ? "RESULT PASS\n" : "RESULT FAIL\n"));
  }
  return rep.passed() ? kExitPass : kExitFail;
}

void validate(const RunConfig& cfg) {
  if (cfg.output != "text" && cfg.output != "json") throw ConfigError("--output must be text or json");
  if (cfg.trunc < 0) throw ConfigError("--trunc must be positive");
  if (cfg.samples < 1) throw ConfigError("--samples must be positive");
  if (cfg.jobs < 1) throw ConfigError("--jobs must be positive");
  if (cfg.budget < 1) throw ConfigError("--budget must be positive");
  if (cfg.m_max < 5) throw ConfigError("--m-max must be at least 5");
  if (cfg.n && *cfg.n < 1) throw ConfigError("--n must be positive");
}

}  // namespace

std::vector<std::string> suite_names() { return {"ladder", "modular-equation", "valuations", "eigen", "identities", "hrr"}; }

SuiteReport run_suite(const std::string& name, const RunConfig& cfg) {
  if (name == "ladder") return ladder_suite(cfg);
  if (name == "modular-equation") return modular_equation_suite(cfg);
  if (name == "valuations") return valuations_suite(cfg);
  if (name == "eigen") return eigen_suite(cfg);
  if (name == "identities") return identities_suite(cfg);
  if (name == "hrr") return hrr_suite(cfg);
  std::string names;
  for (const auto& s : suite_names()) names += (names.empty() ? "" : ", ") + s;
  throw ConfigError("unknown suite '" + name + "'; valid names: " + names);
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
    if (cfg.command == "expand") return run_expand(cfg, out);
    if (cfg.command == "verify-family") return run_verify_family(cfg, out);
    if (cfg.command == "suite") return run_suite_command(cfg, out);
    throw ConfigError("unknown command '" + cfg.command + "'");
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const BudgetError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"q-series congruence toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&cfg](CLI::App* sub) {
    sub->add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cfg.out_path, "write the report to FILE");
    sub->add_option("--budget", cfg.budget, "largest coefficient index any check may request");
    sub->add_option("--jobs", cfg.jobs, "worker threads");
  };

  auto* expand = app.add_subcommand("expand", "print the first N coefficients of a catalog series");
  expand->add_option("name", cfg.target, "catalog name, e.g. partition or colored(3)")->required();
  expand->add_option("N", cfg.trunc, "number of coefficients")->required();
  common(expand);

  auto* vf = app.add_subcommand("verify-family", "check a congruence family (or all) on sampled coefficients");
  vf->add_option("name", cfg.target, "family name or 'all'")->required();
  vf->add_option("--alpha-max", cfg.alpha_max, "deepest alpha level (default: per family)");
  vf->add_option("--samples", cfg.samples, "indices checked per alpha level");
  vf->add_option("--inject-fault", cfg.inject_fault, "test mode: corrupt one cached coefficient")->group("");
  common(vf);

  auto* suite = app.add_subcommand("suite", "run a check suite: ladder, modular-equation, valuations, eigen, identities, hrr");
  suite->add_option("name", cfg.target, "suite name")->required();
  suite->add_option("--trunc", cfg.trunc, "truncation order (default: per suite)");
  suite->add_option("--alpha-max", cfg.alpha_max, "deepest ladder step");
  suite->add_option("--m-max", cfg.m_max, "largest power of t in the valuation tables");
  suite->add_option("--n", cfg.n, "single index for the hrr suite");
  common(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitPass : kExitConfig;
  }
  if (expand->parsed()) cfg.command = "expand";
  if (vf->parsed()) cfg.command = "verify-family";
  if (suite->parsed()) cfg.command = "suite";
  return run(cfg, out, err);
}

}  // namespace qcong::cli
