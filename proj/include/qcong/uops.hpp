#pragma once

// The level-5 machinery: the U5 operator pair, the ladder L_α of modified
// generating functions for p(5^α n + λ_α), decomposition of modular
// functions into polynomials in the Hauptmodul t, recovery of the degree-5
// modular equation between t(τ) and t(5τ), and the 5-adic valuation ledger.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qcong/series.hpp"

namespace qcong {

/// Raised when a computation would need more partition coefficients than
/// the configured budget allows.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::int64_t kDefaultCoefficientBudget = 2'000'000;

// ---------------------------------------------------------------------------
// Polynomials in t.

class TPolynomial {
 public:
  TPolynomial() = default;
  explicit TPolynomial(std::map<unsigned, Rat> coeffs, std::string generator = "t");

  static TPolynomial monomial(unsigned power, const Rat& c, std::string generator = "t");

  /// Nonzero coefficients keyed by power of the generator.
  const std::map<unsigned, Rat>& coeffs() const noexcept { return coeffs_; }
  const std::string& generator() const noexcept { return generator_; }

  Rat coefficient(unsigned power) const;
  std::optional<unsigned> degree() const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_integral() const;

  /// Substitute the generator's series; exact to order N.
  QSeriesRat evaluate(const QSeries& generator_series, std::int64_t N) const;

  TPolynomial scaled(const Rat& k) const;
  std::string to_string() const;

  friend TPolynomial operator+(const TPolynomial& a, const TPolynomial& b);
  friend TPolynomial operator-(const TPolynomial& a, const TPolynomial& b);
  friend TPolynomial operator*(const TPolynomial& a, const TPolynomial& b);
  friend bool operator==(const TPolynomial& a, const TPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void prune();

  std::map<unsigned, Rat> coeffs_;
  std::string generator_ = "t";
};

/// t = q ∏((1 - q^(5m)) / (1 - q^m))^6 to order N.
QSeries hauptmodul_t(std::int64_t N);

/// 𝒜 = q ∏(1 - q^(25m)) / (1 - q^m) to order N.
QSeries weight_A(std::int64_t N);

/// Greedy leading-order elimination against powers of a generator
/// g = q + O(q^2). Powers above `degree_cap` (default (trunc-1)/2) are not
/// used; a residual surviving below the truncation raises
/// std::domain_error("not a polynomial in t at this truncation").
TPolynomial decompose_in_t(const QSeries& a, std::optional<unsigned> degree_cap = std::nullopt);
TPolynomial decompose_in_t(const QSeriesRat& a, std::optional<unsigned> degree_cap = std::nullopt);

/// Same, against an arbitrary monic generator series of order 1.
TPolynomial decompose_in_generator(const QSeriesRat& a, const QSeries& generator, const std::string& name,
                                   std::optional<unsigned> degree_cap = std::nullopt);

// ---------------------------------------------------------------------------
// U5 operators.

/// U5^(1): Σ a(n) q^n ↦ Σ a(5n) q^n.
QSeries u5_plain(const QSeries& a);

/// U5^(0): U5^(1)(𝒜 · a).
QSeries u5_weighted(const QSeries& a);

/// U5^(1)(weight · a) with an explicit weight series.
QSeries u5_weighted(const QSeries& a, const QSeries& weight);

/// U5^(α): the weighted operator for even α, the plain one for odd α.
QSeries u5_alpha(unsigned alpha, const QSeries& a);

// ---------------------------------------------------------------------------
// Ladder.

/// Minimal positive λ with 24λ ≡ 1 (mod 5^α), lifted one power of 5 at a time.
std::int64_t ladder_lambda(unsigned alpha);

/// Largest partition index needed by ladder_term(alpha, N).
std::int64_t ladder_required_index(unsigned alpha, std::int64_t N);

/// L_α = φ_α · Σ p(5^α n + λ_α) q^(n+1), φ_α = (q^5;q^5)_∞ for odd α and
/// (q;q)_∞ for even α, built straight from partition numbers.
QSeries ladder_term(unsigned alpha, std::int64_t N, std::int64_t budget = kDefaultCoefficientBudget);

struct StepReport {
  unsigned alpha = 0;
  std::int64_t trunc = 0;
  bool passed = false;
  std::optional<std::int64_t> first_mismatch;
  std::string detail;
};

/// Checks U5^(α)(L_α) = L_{α+1} to order N. `weight_override` replaces 𝒜
/// in the weighted step (used to show that a perturbed operator fails).
StepReport ladder_step_check(unsigned alpha, std::int64_t N, std::optional<QSeries> weight_override = std::nullopt,
                             std::int64_t budget = kDefaultCoefficientBudget);

// ---------------------------------------------------------------------------
// Modular equation t^5 + Σ_{j<5} a_j(5τ) t^j = 0.

struct ModularEquation {
  std::array<TPolynomial, 5> a;
  std::int64_t verified_to = 0;
};

/// Undetermined coefficients over ℚ (a_j of degree <= 5 in t), then a full
/// residual check to order N. N must leave at least 50 surplus equations.
ModularEquation recover_modular_equation(std::int64_t N);

/// First exponent below N where t^5 + Σ a_j(t(5τ)) t^j is nonzero.
std::optional<std::int64_t> modular_equation_residual(const ModularEquation& eq, std::int64_t N);

/// The a_j as printed in the source display, duplicate powers summed.
std::array<TPolynomial, 5> printed_modular_equation();

struct CoefficientDiscrepancy {
  unsigned j = 0;
  unsigned power = 0;
  Rat printed;
  Rat recovered;
};

std::vector<CoefficientDiscrepancy> compare_with_printed(const ModularEquation& eq);

// ---------------------------------------------------------------------------
// U5 images of powers of t and the valuation ledger.

/// Parity i selects U5^(i): 0 = weighted by 𝒜, 1 = plain.
QSeries apply_u5(unsigned parity, const QSeries& a);

struct PowerTable {
  unsigned parity = 1;
  unsigned m_max = 0;
  std::int64_t trunc = 0;
  std::vector<TPolynomial> direct;      ///< index m: decomposition of U5^(i)(t^m)
  std::vector<TPolynomial> recurrence;  ///< m < 5 copied from direct, then the recurrence
  std::optional<unsigned> first_disagreement;
  bool agree() const { return !first_disagreement.has_value(); }
};

/// Default truncation for a table up to m_max (room for degree 5 m_max + 1
/// plus an equal number of verification coefficients).
std::int64_t default_table_trunc(unsigned m_max);

PowerTable u5_power_table(unsigned parity, unsigned m_max, std::int64_t N = 0,
                          const ModularEquation* equation = nullptr);

/// 5-exponent floor in the t^r coefficient of U5^(i)(t^m).
long pattern_exponent(unsigned parity, unsigned m, unsigned r);

/// Lowest power of t allowed in U5^(i)(t^m).
unsigned pattern_min_power(unsigned parity, unsigned m);

struct PatternCell {
  unsigned m = 0;
  unsigned r = 0;
  Rat coefficient;
  long required = 0;
  std::optional<long> observed;
  bool passed = false;
  std::string reason;
};

struct PatternReport {
  unsigned parity = 0;
  std::vector<PatternCell> cells;
  bool passed = true;
};

PatternReport valuation_pattern_check(const PowerTable& table);
PatternReport valuation_pattern_check(unsigned parity, unsigned m_max, std::int64_t N = 0);

/// θ_i(m) = ⌊(5m - i)/2⌋.
long theta(unsigned parity, unsigned m);

struct Membership {
  bool member = false;
  std::string reason;
};

/// 𝒱^(i) membership: zero t^0 term, every t^m coefficient an integer
/// divisible by 5^θ_i(m).
Membership ledger_membership(const TPolynomial& f, unsigned parity);

/// Apply U5^(i) to a polynomial in t by linearity through the table.
TPolynomial apply_table(const PowerTable& table, const TPolynomial& f);

struct StabilityReport {
  bool precondition_ok = false;
  bool stable = false;
  Membership input;
  Membership image_membership;
  TPolynomial image;  ///< (1/5)·U5^(i)(f)
};

/// For f ∈ 𝒱^(i): is (1/5)·U5^(i)(f) ∈ 𝒱^(1-i)?
StabilityReport vspace_stability_check(const PowerTable& table, const TPolynomial& sample);

/// Random element of 𝒱^(i) with terms t^1 .. t^max_degree.
TPolynomial random_ledger_member(unsigned parity, unsigned max_degree, std::mt19937_64& rng);

}  // namespace qcong
