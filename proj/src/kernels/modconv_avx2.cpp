#include <immintrin.h>

#include "qcong/modkernel.hpp"

namespace qcong::kernels::avx2 {

namespace {

inline std::uint64_t fold_lanes(__m256i acc, std::uint32_t p) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t s = 0;
  for (std::uint64_t v : lanes) s += v % p;
  return s % p;
}

}  // namespace

std::uint32_t dot_mod(const std::uint32_t* a, const std::uint32_t* b, std::size_t n, std::uint32_t p) {
  // Each iteration feeds one product into every 64-bit lane of both
  // accumulators (even and odd 32-bit halves), so 255 iterations stay
  // below 2^64 for p < 2^28.
  constexpr std::size_t kChunk = 255;
  std::uint64_t total = 0;
  std::size_t i = 0;
  const std::size_t vec_end = n - n % 8;
  while (i < vec_end) {
    __m256i even = _mm256_setzero_si256();
    __m256i odd = _mm256_setzero_si256();
    const std::size_t stop = (vec_end - i > kChunk * 8) ? i + kChunk * 8 : vec_end;
    for (; i < stop; i += 8) {
      const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
      const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
      even = _mm256_add_epi64(even, _mm256_mul_epu32(va, vb));
      odd = _mm256_add_epi64(odd, _mm256_mul_epu32(_mm256_srli_epi64(va, 32), _mm256_srli_epi64(vb, 32)));
    }
    total = (total + fold_lanes(even, p) + fold_lanes(odd, p)) % p;
  }
  std::uint64_t tail = 0;
  for (; i < n; ++i) tail += static_cast<std::uint64_t>(a[i]) * b[i];
  return static_cast<std::uint32_t>((total + tail % p) % p);
}

}  // namespace qcong::kernels::avx2
