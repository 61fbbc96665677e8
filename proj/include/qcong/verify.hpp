#pragma once

// Congruence-family verification over the generating-function catalog,
// q-series identity checks, and the mod-5 eigenfunction detector on the
// level-20 setting.

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qcong/series.hpp"

namespace qcong {

/// α ↦ a·α + b·⌊α/2⌋ + c.
struct ExponentRule {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t operator()(unsigned alpha) const {
    return a * static_cast<std::int64_t>(alpha) + b * static_cast<std::int64_t>(alpha / 2) + c;
  }
  std::string describe() const;
};

/// "If multiplier·n ≡ residue (mod p^condition(α)) and n ≥ first_index,
/// then coefficient(source, n) ≡ 0 (mod p^exponent(α))."
struct CongruenceFamily {
  std::string name;
  std::string source;  ///< catalog key
  std::string statement;
  std::int64_t multiplier = 1;
  std::int64_t residue = 0;
  unsigned prime = 5;
  ExponentRule condition{1, 0, 0};
  ExponentRule exponent{1, 0, 0};
  std::int64_t first_index = 0;
  unsigned default_alpha_max = 1;
};

const std::vector<CongruenceFamily>& family_catalog();

/// Throws std::invalid_argument listing the family names if unknown.
const CongruenceFamily& find_family(const std::string& name);

std::string family_names();

/// The first `count` indices n ≥ first_index with multiplier·n ≡ residue
/// (mod p^condition(α)), in increasing order.
std::vector<std::int64_t> family_indices(const CongruenceFamily& f, unsigned alpha, std::size_t count);

/// Largest coefficient index needed to check α = 1..alpha_max.
std::int64_t family_required_index(const CongruenceFamily& f, unsigned alpha_max, std::size_t samples);

/// Expanded catalog series shared by verification cells. Series are grown
/// on demand; verification only reads after ensure() has been called.
class CoefficientCache {
 public:
  /// Makes `source` available to at least q^(index+1).
  void ensure(const std::string& source, std::int64_t index);

  /// Coefficient of q^n; throws TruncationError if not cached that far.
  Int coefficient(const std::string& source, std::int64_t n) const;

  /// Test hook: add `delta` to one cached coefficient.
  void corrupt(const std::string& source, std::int64_t n, const Int& delta);

 private:
  mutable std::mutex mu_;
  std::map<std::string, QSeries> series_;
  std::map<std::string, std::map<std::int64_t, Int>> faults_;
};

struct AlphaRecord {
  unsigned alpha = 0;
  unsigned prime = 0;
  std::int64_t exponent = 0;
  Int modulus;
  std::int64_t checked = 0;
  bool passed = false;
  bool skipped = false;  ///< beyond budget; nothing checked
  std::optional<std::int64_t> witness;
  std::optional<unsigned> min_valuation;  ///< nullopt when every checked coefficient is zero
};

struct FamilyReport {
  std::string family;
  std::vector<AlphaRecord> records;
  bool partial = false;
  bool passed() const;
};

struct VerifyOptions {
  unsigned alpha_max = 0;  ///< 0: the family default
  std::size_t samples = 25;
  std::int64_t budget = 1'000'000;
  unsigned jobs = 1;
};

FamilyReport verify_family(const CongruenceFamily& f, const VerifyOptions& opt, CoefficientCache& cache);
FamilyReport verify_family(const CongruenceFamily& f, const VerifyOptions& opt);

/// Runs several families; (family, α) cells are spread over opt.jobs workers
/// and merged in catalog order.
std::vector<FamilyReport> verify_families(const std::vector<CongruenceFamily>& fs, const VerifyOptions& opt,
                                          CoefficientCache& cache);

/// Recomputes coefficient(source, n) from a fresh expansion and reports
/// whether p^exponent(α) divides it.
bool recheck_divisible(const CongruenceFamily& f, unsigned alpha, std::int64_t n);

// ---------------------------------------------------------------------------

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string details;
};

struct IdentityReport {
  std::string name;
  std::int64_t trunc = 0;
  bool passed = false;
  std::optional<std::int64_t> first_mismatch;
  std::vector<CheckResult> checks;
};

/// name ∈ {p5n4, p5n4_in_t, p11n6}.
IdentityReport verify_identity(const std::string& name, std::int64_t N);

std::vector<std::string> identity_names();

// ---------------------------------------------------------------------------

/// Which weight the second operator applies.
enum class EigenWeight {
  /// q^2 · CΦ2(q)/CΦ2(q^25), the eta quotient E(τ)/E(25τ) with E the
  /// eta form of CΦ2.
  eta_ratio_25,
  /// CΦ2(q)/CΦ2(q^5) as a plain series quotient.
  series_ratio_5,
};

struct EigenSetup {
  std::int64_t trunc = 0;  ///< length of the input series (25 · output order)
  EigenWeight weight_kind = EigenWeight::eta_ratio_25;
  QSeries x, y, t, weight;
};

/// Builds x, y, t = y + 4xy and the weight to order 25·N_out.
EigenSetup make_eigen_setup(std::int64_t n_out, EigenWeight kind = EigenWeight::eta_ratio_25);

/// U^(1) is U5; U^(0) is U5(weight · f).
QSeries eigen_u1(const EigenSetup& s, const QSeries& f);
QSeries eigen_u0(const EigenSetup& s, const QSeries& f);

struct EigenReport {
  std::int64_t trunc = 0;
  bool opening_matches = false;  ///< t = q^2 + 9q^3 + 50q^4 + 219q^5 + ...
  bool fixed_mod_p = false;      ///< U^(0)∘U^(1)(f) ≡ f
  bool nonzero_mod_p = false;    ///< f ≢ 0
  std::optional<std::int64_t> first_mismatch;
  bool eigenfunction() const { return fixed_mod_p && nonzero_mod_p; }
};

/// Decides from the series alone whether f is fixed mod 5 by the composite.
EigenReport eigen_detect(const EigenSetup& s, const QSeries& f, std::int64_t n_out);

/// eigen_detect on s.t plus the opening-coefficient check.
EigenReport eigen_check(const EigenSetup& s, std::int64_t n_out);

}  // namespace qcong
