#include <stdexcept>

#include "qcong/uops.hpp"

namespace qcong {

namespace {

constexpr unsigned kUnknownDegree = 5;
constexpr std::int64_t kSurplusEquations = 50;

QSeries t_at_5tau(std::int64_t N) { return substitute_power(hauptmodul_t(N / 5 + 2), 5).truncated(N); }

std::vector<QSeries> powers(const QSeries& g, unsigned upto, std::int64_t N) {
  std::vector<QSeries> out{QSeries::one(N)};
  for (unsigned k = 1; k <= upto; ++k) out.push_back(mul(out.back(), g).with_offset(0).truncated(N));
  return out;
}

// Row-reduces [A | b] in place; returns the pivot column of each pivot row.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Rat>>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Rat inv = 1 / rows[r][c];
    for (std::size_t k = c; k <= ncols; ++k) rows[r][k] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rat f = rows[i][c];
      for (std::size_t k = c; k <= ncols; ++k) {
        if (rows[r][k] != 0) rows[i][k] -= f * rows[r][k];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

TPolynomial neg_poly(std::initializer_list<std::pair<unsigned, Int>> terms) {
  std::map<unsigned, Rat> m;
  for (const auto& [p, c] : terms) m[p] -= Rat(c);
  return TPolynomial(std::move(m));
}

Int p5(unsigned e) { return ipow(5, e); }

}  // namespace

ModularEquation recover_modular_equation(std::int64_t N) {
  constexpr std::size_t kUnknowns = 5 * (kUnknownDegree + 1);
  if (N < static_cast<std::int64_t>(kUnknowns) + kSurplusEquations) {
    throw std::invalid_argument("recover_modular_equation: truncation " + std::to_string(N) +
                                " leaves fewer than 50 surplus equations");
  }
  const QSeries t = hauptmodul_t(N);
  const auto tp = powers(t, 5, N);
  const auto sp = powers(t_at_5tau(N), kUnknownDegree, N);

  // Column j*(d+1)+k holds the q-coefficients of t(5τ)^k · t^j.
  std::vector<QSeries> basis;
  for (unsigned j = 0; j < 5; ++j) {
    for (unsigned k = 0; k <= kUnknownDegree; ++k) basis.push_back(mul(sp[k], tp[j]).with_offset(0).truncated(N));
  }
  std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(N), std::vector<Rat>(kUnknowns + 1));
  for (std::int64_t n = 0; n < N; ++n) {
    for (std::size_t c = 0; c < kUnknowns; ++c) rows[n][c] = basis[c].at(n);
    rows[n][kUnknowns] = -Rat(tp[5].at(n));
  }
  const auto pivots = row_reduce(rows, kUnknowns);
  if (pivots.size() < kUnknowns) throw std::domain_error("modular equation: singular system, truncation too small");
  for (std::size_t i = kUnknowns; i < rows.size(); ++i) {
    if (rows[i][kUnknowns] != 0) throw std::domain_error("modular equation: inconsistent system");
  }

  ModularEquation eq;
  for (unsigned j = 0; j < 5; ++j) {
    std::map<unsigned, Rat> m;
    for (unsigned k = 0; k <= kUnknownDegree; ++k) m[k] = rows[j * (kUnknownDegree + 1) + k][kUnknowns];
    eq.a[j] = TPolynomial(std::move(m));
  }
  if (auto bad = modular_equation_residual(eq, N)) {
    throw std::domain_error("modular equation: solution fails at q^" + std::to_string(*bad));
  }
  eq.verified_to = N;
  return eq;
}

std::optional<std::int64_t> modular_equation_residual(const ModularEquation& eq, std::int64_t N) {
  const QSeries t = hauptmodul_t(N);
  const QSeries t5 = t_at_5tau(N);
  const auto tp = powers(t, 5, N);
  QSeriesRat total = to_rational(tp[5]);
  for (unsigned j = 0; j < 5; ++j) total = add(total, mul_generic(eq.a[j].evaluate(t5, N), to_rational(tp[j])));
  return total.order();
}

std::array<TPolynomial, 5> printed_modular_equation() {
  return {
      neg_poly({{1, 1}}),
      neg_poly({{3, p5(3)}, {1, 6 * p5(1)}}),
      neg_poly({{3, p5(6)}, {2, 6 * p5(4)}, {1, 63 * p5(1)}}),
      neg_poly({{4, p5(9)}, {3, 6 * p5(7)}, {2, 63 * p5(4)}, {1, 52 * p5(2)}}),
      neg_poly({{5, p5(12)}, {4, 6 * p5(10)}, {3, 63 * p5(7)}, {4, 52 * p5(5)}, {5, 63 * p5(2)}}),
  };
}

std::vector<CoefficientDiscrepancy> compare_with_printed(const ModularEquation& eq) {
  const auto printed = printed_modular_equation();
  std::vector<CoefficientDiscrepancy> out;
  for (unsigned j = 0; j < 5; ++j) {
    std::map<unsigned, bool> powers_seen;
    for (const auto& [m, c] : printed[j].coeffs()) powers_seen[m] = true;
    for (const auto& [m, c] : eq.a[j].coeffs()) powers_seen[m] = true;
    for (const auto& [m, seen] : powers_seen) {
      const Rat p = printed[j].coefficient(m);
      const Rat r = eq.a[j].coefficient(m);
      if (p != r) out.push_back({j, m, p, r});
    }
  }
  return out;
}

}  // namespace qcong
