#pragma once

// Word-size modular convolution kernels.
//
// Residues are uint32 values below a prime p < 2^28, so a single product
// fits in 56 bits and 255 products can be summed in a uint64 lane before a
// reduction is due. The scalar kernel is the reference; the AVX2 kernel must
// agree with it bit for bit. The active variant is chosen once at startup
// from CPUID and can be overridden (tests force each variant in turn).

#include <cstdint>
#include <span>
#include <string_view>

namespace qcong::kernels {

inline constexpr std::uint32_t kMaxModulus = 1u << 28;

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// True when the variant was compiled in and the running CPU supports it.
bool isa_supported(Isa isa);

Isa active_isa();

/// Select a variant; throws std::runtime_error if unsupported here.
void set_active_isa(Isa isa);

/// Σ a[i]·b[i] mod p over equal-length spans.
std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::uint32_t p);

/// out[k] = Σ_{i+j=k} a[i]·b[j] mod p for k < out.size().
void convolve_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::span<std::uint32_t> out,
                  std::uint32_t p);

namespace scalar {
std::uint32_t dot_mod(const std::uint32_t* a, const std::uint32_t* b, std::size_t n, std::uint32_t p);
}

namespace avx2 {
std::uint32_t dot_mod(const std::uint32_t* a, const std::uint32_t* b, std::size_t n, std::uint32_t p);
}

}  // namespace qcong::kernels
