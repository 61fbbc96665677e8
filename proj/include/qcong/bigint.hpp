#pragma once

// Arbitrary-precision integer and rational aliases plus the handful of
// number-theoretic helpers shared by every module.

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace qcong {

using Int = mpz_class;
using Rat = mpq_class;

/// Exponent of the largest power of p dividing v; nullopt when v == 0.
std::optional<unsigned> valuation(const Int& v, unsigned long p);

/// ν_p of a rational: ν_p(num) - ν_p(den); nullopt when r == 0.
std::optional<long> valuation(const Rat& r, unsigned long p);

Int ipow(unsigned long base, unsigned long exp);

bool is_prime(std::uint64_t n);

/// Inverse of a modulo m (m >= 2, gcd(a, m) == 1); throws otherwise.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

/// Floor and ceiling division for signed operands, b > 0.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

/// Canonical representative of a in [0, m).
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m) { return a - floor_div(a, m) * m; }

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& v) { return v.get_str(); }

}  // namespace qcong
