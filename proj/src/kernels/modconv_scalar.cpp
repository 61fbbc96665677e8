#include "qcong/modkernel.hpp"

namespace qcong::kernels::scalar {

std::uint32_t dot_mod(const std::uint32_t* a, const std::uint32_t* b, std::size_t n, std::uint32_t p) {
  constexpr std::size_t kChunk = 255;
  std::uint64_t total = 0;
  std::size_t i = 0;
  while (i < n) {
    const std::size_t end = (n - i > kChunk) ? i + kChunk : n;
    std::uint64_t acc = 0;
    for (; i < end; ++i) acc += static_cast<std::uint64_t>(a[i]) * b[i];
    total = (total + acc % p) % p;
  }
  return static_cast<std::uint32_t>(total);
}

}  // namespace qcong::kernels::scalar
