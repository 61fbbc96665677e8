// Exact integer Cauchy products through residue arithmetic.
//
// Coefficients are reduced modulo enough word-size primes that the product
// of the primes exceeds twice the largest possible output magnitude; each
// residue convolution runs on the vector kernel and the integers are
// rebuilt with Garner's mixed-radix CRT.

#include <mutex>

#include "qcong/modkernel.hpp"
#include "qcong/series.hpp"

namespace qcong::detail {

namespace {

// Every prime used lies in (2^27, 2^28), so each contributes > 27 bits.
constexpr unsigned kBitsPerPrime = 27;

const std::vector<std::uint32_t>& primes_at_least(std::size_t count) {
  static std::mutex mu;
  static std::vector<std::uint32_t> primes;
  std::lock_guard lock(mu);
  std::uint32_t candidate = primes.empty() ? kernels::kMaxModulus - 1 : primes.back() - 2;
  while (primes.size() < count) {
    while (!is_prime(candidate)) candidate -= 2;
    primes.push_back(candidate);
    candidate -= 2;
  }
  return primes;
}

inline std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t powmod(std::uint32_t a, std::uint32_t e, std::uint32_t p) {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::size_t max_bits(std::span<const Int> c, std::size_t len) {
  std::size_t b = 0;
  for (std::size_t i = 0; i < std::min(len, c.size()); ++i) {
    if (c[i] != 0) b = std::max<std::size_t>(b, mpz_sizeinbase(c[i].get_mpz_t(), 2));
  }
  return b;
}

}  // namespace

QSeries mul_multimodular(const QSeries& a0, const QSeries& b0) {
  const QSeries a = a0.normalized();
  const QSeries b = b0.normalized();
  const std::int64_t off = a.offset() + b.offset();
  const std::int64_t tr = std::min(a.trunc() + b.offset(), b.trunc() + a.offset());
  const std::size_t len = static_cast<std::size_t>(tr - off);
  const std::size_t la = std::min(len, a.size());
  const std::size_t lb = std::min(len, b.size());

  // |c_k| <= min(la, lb) · max|a| · max|b|; one extra bit for the sign.
  std::size_t terms_bits = 1;
  while ((std::size_t{1} << terms_bits) < std::min(la, lb) + 1) ++terms_bits;
  const std::size_t bound_bits = max_bits(a.coeffs(), la) + max_bits(b.coeffs(), lb) + terms_bits + 1;
  const std::size_t nprimes = bound_bits / kBitsPerPrime + 1;
  const auto& all_primes = primes_at_least(nprimes);
  const std::vector<std::uint32_t> primes(all_primes.begin(), all_primes.begin() + static_cast<std::ptrdiff_t>(nprimes));

  // residues[j][k]: coefficient k of the product modulo primes[j].
  std::vector<std::vector<std::uint32_t>> residues(nprimes, std::vector<std::uint32_t>(len));
  std::vector<std::uint32_t> ra(la), rb(lb);
  for (std::size_t j = 0; j < nprimes; ++j) {
    const std::uint32_t p = primes[j];
    for (std::size_t i = 0; i < la; ++i) ra[i] = static_cast<std::uint32_t>(mpz_fdiv_ui(a.coeffs()[i].get_mpz_t(), p));
    for (std::size_t i = 0; i < lb; ++i) rb[i] = static_cast<std::uint32_t>(mpz_fdiv_ui(b.coeffs()[i].get_mpz_t(), p));
    kernels::convolve_mod(ra, rb, residues[j], p);
  }

  // Garner: inv[i][j] = primes[j]^{-1} mod primes[i] for j < i.
  std::vector<std::vector<std::uint32_t>> inv(nprimes);
  for (std::size_t i = 0; i < nprimes; ++i) {
    inv[i].resize(i);
    for (std::size_t j = 0; j < i; ++j) inv[i][j] = powmod(primes[j] % primes[i], primes[i] - 2, primes[i]);
  }
  Int modulus = 1;
  for (std::uint32_t p : primes) modulus *= p;
  const Int half = modulus / 2;

  std::vector<Int> out(len);
  std::vector<std::uint32_t> digits(nprimes);
  for (std::size_t k = 0; k < len; ++k) {
    for (std::size_t i = 0; i < nprimes; ++i) {
      const std::uint32_t p = primes[i];
      std::uint32_t x = residues[i][k];
      for (std::size_t j = 0; j < i; ++j) {
        const std::uint32_t dj = digits[j] % p;
        x = mulmod(x >= dj ? x - dj : x + p - dj, inv[i][j], p);
      }
      digits[i] = x;
    }
    Int& v = out[k];
    v = digits[nprimes - 1];
    for (std::size_t j = nprimes - 1; j-- > 0;) {
      mpz_mul_ui(v.get_mpz_t(), v.get_mpz_t(), primes[j]);
      mpz_add_ui(v.get_mpz_t(), v.get_mpz_t(), digits[j]);
    }
    if (v > half) v -= modulus;
  }
  return QSeries(off, std::move(out));
}

}  // namespace qcong::detail
