#include "qcong/bigint.hpp"

#include <stdexcept>

namespace qcong {

std::optional<unsigned> valuation(const Int& v, unsigned long p) {
  if (v == 0) return std::nullopt;
  Int rest;
  Int base = p;
  return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), v.get_mpz_t(), base.get_mpz_t()));
}

std::optional<long> valuation(const Rat& r, unsigned long p) {
  if (r == 0) return std::nullopt;
  long num = static_cast<long>(*valuation(Int(r.get_num()), p));
  long den = static_cast<long>(*valuation(Int(r.get_den()), p));
  return num - den;
}

Int ipow(unsigned long base, unsigned long exp) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0) return n == p;
  }
  auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, a, m);
      a = mulmod(a, a, m);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit inputs.
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  if (m < 2) throw std::invalid_argument("inverse_mod: modulus must be at least 2");
  std::int64_t old_r = mod_floor(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw std::invalid_argument("inverse_mod: argument is not a unit");
  return mod_floor(old_s, m);
}

}  // namespace qcong
