#include <numeric>
#include <stdexcept>

#include "qcong/hrr.hpp"

namespace qcong {

DedekindSumArgs::DedekindSumArgs(std::int64_t h, std::int64_t k) : h_(h), k_(k) {
  if (k <= 0) throw std::invalid_argument("dedekind sum: k must be positive");
  if (std::gcd(h, k) != 1) throw std::invalid_argument("dedekind sum: gcd(h, k) must be 1");
}

// ((r/k)) = (2r - k)/(2k) and ((hr/k)) = (2(hr mod k) - k)/(2k) for 0 < r < k.
std::int64_t dedekind_sum_scaled(std::int64_t h, std::int64_t k) {
  const std::int64_t hm = mod_floor(h, k);
  std::int64_t acc = 0;
  std::int64_t hr = 0;
  for (std::int64_t r = 1; r < k; ++r) {
    hr += hm;
    if (hr >= k) hr -= k;
    acc += (2 * r - k) * (2 * hr - k);
  }
  return acc;
}

Rat dedekind_sum(const DedekindSumArgs& a) {
  if (a.k() == 1) return Rat(0);
  Rat s(Int(dedekind_sum_scaled(a.h(), a.k())), Int(4) * a.k() * a.k());
  s.canonicalize();
  return s;
}

}  // namespace qcong
