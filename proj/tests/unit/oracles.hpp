#pragma once

// Reference computations that share no code with the library.

#include <cstdint>
#include <vector>

#include "qcong/bigint.hpp"

namespace oracle {

using qcong::Int;

/// p(0..N-1) by the coin-change recurrence over part sizes.
inline std::vector<Int> partitions_by_parts(std::int64_t N) {
  std::vector<Int> p(static_cast<std::size_t>(N));
  p[0] = 1;
  for (std::int64_t part = 1; part < N; ++part) {
    for (std::int64_t n = part; n < N; ++n) p[n] += p[n - part];
  }
  return p;
}

/// ∏_{m>=1} (1 - q^(scale m))^|exponent| to q^N by repeated dense
/// multiplication (exponent > 0) or geometric-series division (exponent < 0).
inline std::vector<Int> direct_product(std::int64_t scale, std::int64_t exponent, std::int64_t N) {
  std::vector<Int> c(static_cast<std::size_t>(N));
  c[0] = 1;
  const std::int64_t reps = exponent < 0 ? -exponent : exponent;
  for (std::int64_t m = scale; m < N; m += scale) {
    for (std::int64_t r = 0; r < reps; ++r) {
      if (exponent > 0) {
        for (std::int64_t n = N - 1; n >= m; --n) c[n] -= c[n - m];
      } else {
        for (std::int64_t n = m; n < N; ++n) c[n] += c[n - m];
      }
    }
  }
  return c;
}

/// Dense product of two coefficient vectors, truncated to N.
inline std::vector<Int> times(const std::vector<Int>& a, const std::vector<Int>& b, std::int64_t N) {
  std::vector<Int> c(static_cast<std::size_t>(N));
  for (std::int64_t i = 0; i < N && i < static_cast<std::int64_t>(a.size()); ++i) {
    if (a[i] == 0) continue;
    for (std::int64_t j = 0; i + j < N && j < static_cast<std::int64_t>(b.size()); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

/// p(n) by Euler's pentagonal recurrence, written out independently.
inline std::vector<Int> partitions_euler(std::int64_t N) {
  std::vector<Int> p(static_cast<std::size_t>(N));
  p[0] = 1;
  for (std::int64_t n = 1; n < N; ++n) {
    Int acc = 0;
    for (std::int64_t k = 1;; ++k) {
      const std::int64_t g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const std::int64_t g2 = k * (3 * k + 1) / 2;
      Int term = p[n - g1];
      if (g2 <= n) term += p[n - g2];
      if (k % 2 == 1) acc += term;
      else acc -= term;
    }
    p[n] = acc;
  }
  return p;
}

}  // namespace oracle
