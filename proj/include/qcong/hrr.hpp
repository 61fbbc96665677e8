#pragma once

// Numeric side: exact Dedekind sums, the Rademacher series for p(n), and a
// multiprecision evaluation of the Dedekind eta function with a check of
// its SL(2, Z) transformation law.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "qcong/bigint.hpp"

namespace qcong {

using Real = boost::multiprecision::mpfr_float;

/// (h, k) with k > 0 and gcd(h, k) = 1; throws std::invalid_argument otherwise.
class DedekindSumArgs {
 public:
  DedekindSumArgs(std::int64_t h, std::int64_t k);
  std::int64_t h() const noexcept { return h_; }
  std::int64_t k() const noexcept { return k_; }

 private:
  std::int64_t h_, k_;
};

/// s(h,k) = Σ_{r=1}^{k-1} ((r/k)) ((hr/k)).
Rat dedekind_sum(const DedekindSumArgs& a);

/// 4k²·s(h,k) as an integer.
std::int64_t dedekind_sum_scaled(std::int64_t h, std::int64_t k);

struct PrecisionPolicy {
  double c = 2.0;                 ///< K(n) = ⌈c√n⌉ + extra_terms
  std::int64_t extra_terms = 100;
  unsigned guard_bits = 64;
  std::int64_t terms(std::int64_t n) const;
  unsigned bits(std::int64_t n) const;
};

struct HRREvaluation {
  std::int64_t n = 0;
  std::int64_t terms_used = 0;
  unsigned precision_bits = 0;
  std::string raw_value;  ///< decimal rendering at working precision
  Int rounded;
  double residual = 0;    ///< |raw - rounded|
};

/// Rademacher's series truncated at K(n) terms. Throws std::runtime_error
/// ("insufficient terms/precision ...") when the residual is not below 1/2.
HRREvaluation hrr_p(std::int64_t n, const PrecisionPolicy& policy = {});

/// Same with explicit K and working precision.
HRREvaluation hrr_p_with(std::int64_t n, std::int64_t terms, unsigned bits);

struct ComplexReal {
  Real re, im;
};

/// η(τ) = e^(πiτ/12) ∏(1 - e^(2πimτ)); throws std::domain_error for Im τ <= 0.
ComplexReal eta_numeric(const ComplexReal& tau, unsigned bits);

/// Number of product factors eta_numeric uses at this precision.
std::int64_t eta_factor_count(const Real& im_tau, unsigned bits);

struct SL2Z {
  std::int64_t a, b, c, d;
};

struct EtaTransformReport {
  SL2Z gamma;
  Real relative_error;
  double relative_error_double = 0;
  std::string branch;  ///< which ε case applied
};

/// Compares η(γτ) against ε(γ)·(-i(cτ+d))^(1/2)·η(τ) (for c > 0) or
/// e^(bπi/12)·η(τ) (for c = 0, d = 1). Other matrices are rejected with
/// std::invalid_argument, as is det ≠ 1.
EtaTransformReport check_eta_transformation(const SL2Z& gamma, const ComplexReal& tau, unsigned bits);

/// The five group elements used by the acceptance panel.
std::vector<SL2Z> eta_panel();

}  // namespace qcong
