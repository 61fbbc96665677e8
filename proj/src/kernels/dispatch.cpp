#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcong/modkernel.hpp"

namespace qcong::kernels {

namespace {

Isa detect() {
#if defined(QCONG_HAVE_AVX2_KERNEL) && (defined(__GNUC__) || defined(__clang__))
  if (__builtin_cpu_supports("avx2")) return Isa::avx2;
#endif
  return Isa::scalar;
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

using DotFn = std::uint32_t (*)(const std::uint32_t*, const std::uint32_t*, std::size_t, std::uint32_t);

DotFn dot_for(Isa isa) {
#if defined(QCONG_HAVE_AVX2_KERNEL)
  if (isa == Isa::avx2) return &avx2::dot_mod;
#else
  (void)isa;
#endif
  return &scalar::dot_mod;
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_supported(Isa isa) {
  if (isa == Isa::scalar) return true;
#if defined(QCONG_HAVE_AVX2_KERNEL) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) throw std::runtime_error("kernel variant not supported here: " + std::string(isa_name(isa)));
  active().store(isa, std::memory_order_relaxed);
}

std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::uint32_t p) {
  if (a.size() != b.size()) throw std::invalid_argument("dot_mod: length mismatch");
  if (p < 2 || p >= kMaxModulus) throw std::invalid_argument("dot_mod: modulus out of range");
  return dot_for(active_isa())(a.data(), b.data(), a.size(), p);
}

void convolve_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::span<std::uint32_t> out,
                  std::uint32_t p) {
  if (p < 2 || p >= kMaxModulus) throw std::invalid_argument("convolve_mod: modulus out of range");
  const DotFn dot = dot_for(active_isa());
  const std::size_t la = a.size(), lb = b.size();
  std::fill(out.begin(), out.end(), 0u);
  if (la == 0 || lb == 0) return;
  // b reversed turns every output coefficient into a contiguous dot product.
  std::vector<std::uint32_t> brev(b.rbegin(), b.rend());
  for (std::size_t k = 0; k < out.size(); ++k) {
    const std::size_t i_lo = (k + 1 > lb) ? k + 1 - lb : 0;
    const std::size_t i_hi = std::min(k, la - 1);
    if (i_lo > i_hi) continue;
    const std::size_t n = i_hi - i_lo + 1;
    out[k] = dot(a.data() + i_lo, brev.data() + (lb - 1 - k + i_lo), n, p);
  }
}

}  // namespace qcong::kernels
