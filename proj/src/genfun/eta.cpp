#include <stdexcept>

#include "qcong/genfun.hpp"

namespace qcong {

EtaQuotient::EtaQuotient(std::vector<EtaFactor> factors)
    : factors_(std::move(factors)), prefactor24_(compute_prefactor24(factors_)) {}

EtaQuotient::EtaQuotient(std::vector<EtaFactor> factors, std::int64_t prefactor24)
    : EtaQuotient(std::move(factors)) {
  if (prefactor24 != prefactor24_) {
    throw std::invalid_argument("EtaQuotient: stored prefactor " + std::to_string(prefactor24) +
                                "/24 does not match the factors (" + std::to_string(prefactor24_) + "/24)");
  }
}

std::int64_t EtaQuotient::compute_prefactor24(const std::vector<EtaFactor>& factors) {
  std::int64_t s = 0;
  for (const auto& f : factors) {
    if (f.scale < 1) throw std::invalid_argument("EtaQuotient: scale must be positive");
    s += f.scale * f.exponent;
  }
  return s;
}

namespace {

// ∏(1 - q^(scale·m)) from Σ_k (-1)^k q^(scale·k(3k-1)/2), k ∈ ℤ.
QSeries scaled_euler_product(std::int64_t scale, std::int64_t N) {
  std::vector<Int> c(static_cast<std::size_t>(N));
  c[0] = 1;
  for (std::int64_t k = 1;; ++k) {
    const std::int64_t e1 = scale * (k * (3 * k - 1) / 2);
    if (e1 >= N) break;
    const int sign = (k % 2 == 0) ? 1 : -1;
    c[e1] += sign;
    const std::int64_t e2 = scale * (k * (3 * k + 1) / 2);
    if (e2 < N) c[e2] += sign;
  }
  return QSeries(0, std::move(c));
}

}  // namespace

QSeries euler_product(std::int64_t N) {
  if (N < 1) throw std::invalid_argument("euler_product: N must be positive");
  return scaled_euler_product(1, N);
}

QSeries product_expansion(const std::vector<EtaFactor>& factors, std::int64_t N) {
  if (N < 1) throw std::invalid_argument("product_expansion: N must be positive");
  QSeries r = QSeries::one(N);
  for (const auto& f : factors) {
    if (f.scale < 1) throw std::invalid_argument("product_expansion: scale must be positive");
    if (f.exponent == 0 || f.scale >= N) continue;
    const QSeries e = scaled_euler_product(f.scale, N);
    for (std::int64_t i = 0; i < (f.exponent > 0 ? f.exponent : -f.exponent); ++i) {
      r = f.exponent > 0 ? mul(r, e) : divide(r, e);
    }
  }
  return r.with_offset(0).truncated(N);
}

QSeries expand_eta_quotient(const EtaQuotient& e, std::int64_t qshift24, std::int64_t N) {
  if (!e.integral_with(qshift24)) throw std::domain_error("fractional q-power does not cancel");
  const std::int64_t s = (e.prefactor24() + qshift24) / 24;
  if (s >= N) return QSeries::zero(N);
  return shift(product_expansion(e.factors(), N - s), s);
}

QSeries eisenstein(EisensteinKind kind, std::int64_t N) {
  if (N < 1) throw std::invalid_argument("eisenstein: N must be positive");
  const unsigned long power = kind == EisensteinKind::E2 ? 1 : 3;
  const long weight = kind == EisensteinKind::E2 ? -24 : 240;
  std::vector<Int> sigma(static_cast<std::size_t>(N));
  for (std::int64_t d = 1; d < N; ++d) {
    Int dp;
    mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d), power);
    for (std::int64_t m = d; m < N; m += d) sigma[m] += dp;
  }
  sigma[0] = 1;
  for (std::int64_t n = 1; n < N; ++n) sigma[n] *= weight;
  return QSeries(0, std::move(sigma));
}

}  // namespace qcong
