#include <cmath>
#include <numeric>
#include <stdexcept>

#include "precision.hpp"

namespace qcong {

std::int64_t PrecisionPolicy::terms(std::int64_t n) const {
  return static_cast<std::int64_t>(std::ceil(c * std::sqrt(static_cast<double>(n)))) + extra_terms;
}

// log2 p(n) < π√(2n/3) / ln 2.
unsigned PrecisionPolicy::bits(std::int64_t n) const {
  const double lead = M_PI * std::sqrt(2.0 * static_cast<double>(n) / 3.0) / std::log(2.0);
  return static_cast<unsigned>(std::ceil(lead)) + guard_bits;
}

namespace {

// A_k(n) = Σ_{0<=h<k, (h,k)=1} cos(π (s(h,k) - 2nh/k)), with every angle
// reduced exactly to m·π/(4k²), 0 <= m < 8k².
Real kloosterman_sum(std::int64_t n, std::int64_t k, const Real& pi) {
  if (k == 1) return Real(1);
  const std::int64_t period = 8 * k * k;
  const std::int64_t nk = n % k;
  Real acc = 0;
  for (std::int64_t h = 1; h < k; ++h) {
    if (std::gcd(h, k) != 1) continue;
    const std::int64_t m = mod_floor(dedekind_sum_scaled(h, k) - 8 * k * ((nk * h) % k), period);
    acc += cos(pi * m / (4 * k * k));
  }
  return acc;
}

}  // namespace

HRREvaluation hrr_p_with(std::int64_t n, std::int64_t terms, unsigned bits) {
  if (n < 1) throw std::invalid_argument("hrr_p: n must be at least 1");
  if (terms < 1) throw std::invalid_argument("hrr_p: at least one term required");
  detail::PrecisionScope scope(bits);

  const Real pi = detail::pi_constant();
  const Real C = pi * sqrt(Real(2) / 3);
  const Real mu2 = Real(n) - Real(1) / 24;
  const Real mu = sqrt(mu2);
  const Real mu3 = mu2 * mu;

  // d/dx [sinh(Cμ/k)/μ] at μ = √(x - 1/24):
  //   (C/k) cosh(Cμ/k) / (2μ²) - sinh(Cμ/k) / (2μ³)
  Real total = 0;
  for (std::int64_t k = 1; k <= terms; ++k) {
    const Real a = kloosterman_sum(n, k, pi);
    if (a == 0) continue;
    const Real arg = C * mu / k;
    const Real deriv = (C / k) * cosh(arg) / (2 * mu2) - sinh(arg) / (2 * mu3);
    total += a * sqrt(Real(k)) * deriv;
  }
  total /= pi * sqrt(Real(2));

  HRREvaluation ev;
  ev.n = n;
  ev.terms_used = terms;
  ev.precision_bits = bits;
  ev.raw_value = total.str();
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), total.backend().data(), MPFR_RNDN);
  ev.rounded = z;
  ev.residual = static_cast<double>(abs(total - Real(z.get_str())));
  if (ev.residual >= 0.5) {
    throw std::runtime_error("insufficient terms/precision for p(" + std::to_string(n) + "): raw value " +
                             ev.raw_value);
  }
  return ev;
}

HRREvaluation hrr_p(std::int64_t n, const PrecisionPolicy& policy) {
  return hrr_p_with(n, policy.terms(n), policy.bits(n));
}

}  // namespace qcong
