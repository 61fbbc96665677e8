#include <mutex>
#include <stdexcept>

#include "qcong/genfun.hpp"

namespace qcong {

namespace {

// p(n) via Euler's pentagonal recurrence, extended on demand.
class PartitionTable {
 public:
  QSeries prefix(std::int64_t N) {
    std::lock_guard lock(mu_);
    extend(N);
    return QSeries(0, std::vector<Int>(values_.begin(), values_.begin() + N));
  }

  Int at(std::int64_t n) {
    std::lock_guard lock(mu_);
    extend(n + 1);
    return values_[static_cast<std::size_t>(n)];
  }

 private:
  void extend(std::int64_t N) {
    if (values_.empty()) values_.emplace_back(1);
    values_.reserve(static_cast<std::size_t>(N));
    for (std::int64_t n = static_cast<std::int64_t>(values_.size()); n < N; ++n) {
      Int acc = 0;
      for (std::int64_t k = 1;; ++k) {
        const std::int64_t g1 = k * (3 * k - 1) / 2;
        if (g1 > n) break;
        const std::int64_t g2 = k * (3 * k + 1) / 2;
        if (k % 2 == 1) {
          acc += values_[n - g1];
          if (g2 <= n) acc += values_[n - g2];
        } else {
          acc -= values_[n - g1];
          if (g2 <= n) acc -= values_[n - g2];
        }
      }
      values_.push_back(std::move(acc));
    }
  }

  std::mutex mu_;
  std::vector<Int> values_;
};

PartitionTable& table() {
  static PartitionTable t;
  return t;
}

}  // namespace

QSeries partition_series(std::int64_t N) {
  if (N < 1) throw std::invalid_argument("partition_series: N must be positive");
  return table().prefix(N);
}

Int partition_number(std::int64_t n) {
  if (n < 0) return 0;
  return table().at(n);
}

namespace {

struct Enumerator {
  PartitionPredicate predicate;
  std::uint64_t count = 0;

  // Parts are generated in non-increasing order (strictly decreasing for
  // distinct). `largest_odd` is the first odd part placed, 0 if none yet.
  void run(unsigned remaining, unsigned max_part, unsigned largest_odd) {
    if (remaining == 0) return;
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
      const unsigned odd = (largest_odd == 0 && (part % 2 == 1)) ? part : largest_odd;
      if (part == remaining) {
        // `part` is the smallest part of this partition.
        if (predicate != PartitionPredicate::omega || odd == 0 || odd < 2 * part) ++count;
        continue;
      }
      const unsigned next_max = predicate == PartitionPredicate::distinct ? part - 1 : part;
      if (next_max == 0) continue;
      if (predicate == PartitionPredicate::omega && odd != 0 && odd >= 2 * std::min(next_max, remaining - part)) {
        // Every remaining part is at most next_max, so the smallest part
        // is too small for the odd part already placed.
        continue;
      }
      run(remaining - part, next_max, odd);
    }
  }
};

}  // namespace

std::uint64_t brute_force_count(unsigned n, PartitionPredicate predicate) {
  if (n > kBruteForceLimit) {
    throw std::invalid_argument("brute_force_count: n = " + std::to_string(n) + " exceeds the enumeration guard " +
                                std::to_string(kBruteForceLimit));
  }
  if (n == 0) return 1;
  Enumerator e{predicate};
  e.run(n, n, 0);
  return e.count;
}

}  // namespace qcong
