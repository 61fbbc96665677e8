#include <future>
#include <stdexcept>

#include "qcong/uops.hpp"

namespace qcong {

std::int64_t default_table_trunc(unsigned m_max) { return 10 * static_cast<std::int64_t>(m_max) + 24; }

namespace {

TPolynomial direct_entry(unsigned parity, unsigned m, std::int64_t N) {
  const std::int64_t T = 5 * N;
  const QSeries tm = m == 0 ? QSeries::one(T) : pow(hauptmodul_t(T), m).with_offset(0).truncated(T);
  const QSeries image = apply_u5(parity, tm).truncated(N);
  return decompose_in_t(image);
}

}  // namespace

PowerTable u5_power_table(unsigned parity, unsigned m_max, std::int64_t N, const ModularEquation* equation) {
  if (parity > 1) throw std::invalid_argument("u5_power_table: parity must be 0 or 1");
  if (m_max < 5) throw std::invalid_argument("u5_power_table: m_max must be at least 5 to exercise the recurrence");
  if (N == 0) N = default_table_trunc(m_max);
  if (N < default_table_trunc(m_max)) {
    throw std::invalid_argument("u5_power_table: truncation " + std::to_string(N) + " too small for m_max " +
                                std::to_string(m_max));
  }
  PowerTable table;
  table.parity = parity;
  table.m_max = m_max;
  table.trunc = N;

  std::vector<std::future<TPolynomial>> jobs;
  for (unsigned m = 0; m <= m_max; ++m) jobs.push_back(std::async(std::launch::async, direct_entry, parity, m, N));
  for (auto& j : jobs) table.direct.push_back(j.get());

  std::optional<ModularEquation> owned;
  if (equation == nullptr) {
    owned = recover_modular_equation(200);
    equation = &*owned;
  }
  table.recurrence.assign(table.direct.begin(), table.direct.begin() + 5);
  for (unsigned m = 5; m <= m_max; ++m) {
    TPolynomial acc;
    for (unsigned j = 0; j < 5; ++j) acc = acc - equation->a[j] * table.recurrence[m + j - 5];
    table.recurrence.push_back(acc);
    if (!table.first_disagreement && !(acc == table.direct[m])) table.first_disagreement = m;
  }
  return table;
}

long pattern_exponent(unsigned parity, unsigned m, unsigned r) {
  return static_cast<long>(floor_div(5 * static_cast<std::int64_t>(r) - m - 2 + parity, 2));
}

unsigned pattern_min_power(unsigned parity, unsigned m) {
  return static_cast<unsigned>(ceil_div(static_cast<std::int64_t>(m) + 1 - parity, 5));
}

PatternReport valuation_pattern_check(const PowerTable& table) {
  PatternReport rep;
  rep.parity = table.parity;
  for (unsigned m = 1; m <= table.m_max; ++m) {
    for (const auto& [r, c] : table.direct[m].coeffs()) {
      PatternCell cell;
      cell.m = m;
      cell.r = r;
      cell.coefficient = c;
      cell.required = pattern_exponent(table.parity, m, r);
      cell.observed = valuation(c, 5);
      if (r < pattern_min_power(table.parity, m)) {
        cell.reason = "term below the support bound";
      } else if (c.get_den() != 1) {
        cell.reason = "non-integral coefficient";
      } else if (*cell.observed < cell.required) {
        cell.reason = "5-adic valuation below the required exponent";
      } else {
        cell.passed = true;
      }
      rep.passed = rep.passed && cell.passed;
      rep.cells.push_back(std::move(cell));
    }
  }
  return rep;
}

PatternReport valuation_pattern_check(unsigned parity, unsigned m_max, std::int64_t N) {
  return valuation_pattern_check(u5_power_table(parity, m_max, N));
}

long theta(unsigned parity, unsigned m) {
  return static_cast<long>(floor_div(5 * static_cast<std::int64_t>(m) - parity, 2));
}

Membership ledger_membership(const TPolynomial& f, unsigned parity) {
  for (const auto& [m, c] : f.coeffs()) {
    if (m == 0) return {false, "nonzero constant term"};
    if (c.get_den() != 1) return {false, "non-integral coefficient of t^" + std::to_string(m)};
    const long need = theta(parity, m);
    const long have = *valuation(c, 5);
    if (have < need) {
      return {false, "coefficient of t^" + std::to_string(m) + " has 5-adic valuation " + std::to_string(have) +
                         " < theta_" + std::to_string(parity) + "(" + std::to_string(m) + ") = " + std::to_string(need)};
    }
  }
  return {true, "member"};
}

TPolynomial apply_table(const PowerTable& table, const TPolynomial& f) {
  TPolynomial acc;
  for (const auto& [m, c] : f.coeffs()) {
    if (m > table.m_max) {
      throw std::out_of_range("apply_table: t^" + std::to_string(m) + " beyond table range " +
                              std::to_string(table.m_max));
    }
    acc = acc + table.direct[m].scaled(c);
  }
  return acc;
}

StabilityReport vspace_stability_check(const PowerTable& table, const TPolynomial& sample) {
  StabilityReport rep;
  rep.input = ledger_membership(sample, table.parity);
  rep.precondition_ok = rep.input.member;
  if (!rep.precondition_ok) return rep;
  rep.image = apply_table(table, sample).scaled(Rat(1, 5));
  rep.image_membership = ledger_membership(rep.image, 1 - table.parity);
  rep.stable = rep.image_membership.member;
  return rep;
}

TPolynomial random_ledger_member(unsigned parity, unsigned max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> digit(-50, 50);
  std::map<unsigned, Rat> c;
  for (unsigned m = 1; m <= max_degree; ++m) {
    const Int scale = ipow(5, static_cast<unsigned long>(theta(parity, m)));
    c[m] = Rat(Int(digit(rng)) * scale);
  }
  return TPolynomial(std::move(c));
}

}  // namespace qcong
