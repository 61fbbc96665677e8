#pragma once

// Generating functions: Euler products, eta quotients, Eisenstein series,
// the named-series catalog, and a brute-force partition enumerator used as
// an independent oracle.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qcong/series.hpp"

namespace qcong {

/// One factor η(scale·τ)^exponent.
struct EtaFactor {
  std::int64_t scale;
  std::int64_t exponent;
  friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
};

/// A finite product of eta factors. The q-prefactor of the quotient is
/// q^(prefactor24/24) with prefactor24 = Σ scale·exponent.
class EtaQuotient {
 public:
  explicit EtaQuotient(std::vector<EtaFactor> factors);

  /// Construct with an externally supplied prefactor; throws if it does
  /// not match Σ scale·exponent.
  EtaQuotient(std::vector<EtaFactor> factors, std::int64_t prefactor24);

  const std::vector<EtaFactor>& factors() const noexcept { return factors_; }
  std::int64_t prefactor24() const noexcept { return prefactor24_; }

  /// Integral after multiplying by q^(qshift24/24)?
  bool integral_with(std::int64_t qshift24) const { return (prefactor24_ + qshift24) % 24 == 0; }

  static std::int64_t compute_prefactor24(const std::vector<EtaFactor>& factors);

 private:
  std::vector<EtaFactor> factors_;
  std::int64_t prefactor24_;
};

/// ∏_{m≥1}(1 - q^m) to order N, from the pentagonal-number expansion.
QSeries euler_product(std::int64_t N);

/// ∏_{m≥1}(1 - q^(scale·m))^exponent over all factors, without any q-prefactor.
QSeries product_expansion(const std::vector<EtaFactor>& factors, std::int64_t N);

/// q^((qshift24 + prefactor24)/24) · ∏ factors, to order N (exponents < N).
/// Throws std::domain_error if the fractional q-power does not cancel.
QSeries expand_eta_quotient(const EtaQuotient& e, std::int64_t qshift24, std::int64_t N);

enum class EisensteinKind { E2, E4 };

/// E2 = 1 - 24 Σ σ1(n) q^n, E4 = 1 + 240 Σ σ3(n) q^n.
QSeries eisenstein(EisensteinKind kind, std::int64_t N);

/// Σ p(n) q^n to order N. Backed by a shared, growing table.
QSeries partition_series(std::int64_t N);

/// p(n) from the shared table.
Int partition_number(std::int64_t n);

/// Catalog entry. Parameterized names use the form "colored(k)"; the
/// builder receives k (0 for unparameterized entries) and the order N.
struct NamedSeries {
  std::string name;
  std::string description;
  bool parameterized;
  std::function<QSeries(std::int64_t, std::int64_t)> build;
};

/// Catalog keys: partition, colored(k), distinct, elongated(k), frobenius2,
/// wangyang, jinvariant, mock_omega.
const std::vector<NamedSeries>& catalog();

/// Resolves a catalog name (with parameter, if any) and expands it to order N.
/// Throws std::invalid_argument listing the valid names if unknown.
QSeries expand_named(std::string_view name, std::int64_t N);

/// True if `name` resolves to a catalog recipe.
bool is_catalog_name(std::string_view name);

std::string catalog_names();

enum class PartitionPredicate { all, distinct, omega };

inline constexpr unsigned kBruteForceLimit = 80;

/// Exact count of partitions of n satisfying the predicate, by explicit
/// enumeration. "omega": every odd part is less than twice the smallest part.
std::uint64_t brute_force_count(unsigned n, PartitionPredicate predicate);

}  // namespace qcong
