#pragma once

#include <cmath>
#include <mutex>

#include "qcong/hrr.hpp"

namespace qcong::detail {

// Boost's variable-precision mpfr_float keeps one process-wide default
// precision, so evaluations that change it are serialized.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits) : lock_(mutex()), saved_(Real::default_precision()) {
    Real::default_precision(static_cast<unsigned>(std::ceil(bits * 0.30103)) + 2);
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  static std::recursive_mutex& mutex() {
    static std::recursive_mutex m;
    return m;
  }
  std::unique_lock<std::recursive_mutex> lock_;
  unsigned saved_;
};

inline Real pi_constant() {
  Real pi;
  mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
  return pi;
}

// Copy into a value carrying the current default precision.
inline Real at_working(const Real& x) {
  Real r;
  mpfr_set(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

inline Real from_rational(const Rat& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

}  // namespace qcong::detail
