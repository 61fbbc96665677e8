#pragma once

// Truncated power series in q with exact coefficients.
//
// A series stores the coefficients of q^offset .. q^(trunc-1); every
// coefficient below `offset` is zero and nothing is known at or beyond
// `trunc`. All operations compute the tightest truncation that is implied by
// their operands, so precision loss is always visible in `trunc()`.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcong/bigint.hpp"

namespace qcong {

/// Raised when two series are compared or combined beyond what their
/// truncation orders support.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Coeff>
class TruncatedSeries {
 public:
  using coeff_type = Coeff;

  /// The zero series known to order 1.
  TruncatedSeries() : offset_(0), coeffs_(1) {}

  TruncatedSeries(std::int64_t offset, std::vector<Coeff> coeffs)
      : offset_(offset), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: trunc must exceed offset");
  }

  /// Dense series from small integer literals, starting at q^offset.
  static TruncatedSeries from_ints(std::initializer_list<long> values, std::int64_t offset = 0) {
    std::vector<Coeff> c;
    c.reserve(values.size());
    for (long v : values) c.emplace_back(v);
    return TruncatedSeries(offset, std::move(c));
  }

  static TruncatedSeries zero(std::int64_t trunc, std::int64_t offset = 0) {
    if (trunc <= offset) offset = trunc - 1;
    return TruncatedSeries(offset, std::vector<Coeff>(static_cast<std::size_t>(trunc - offset)));
  }

  /// c·q^exponent known to order trunc.
  static TruncatedSeries monomial(std::int64_t exponent, const Coeff& c, std::int64_t trunc) {
    if (trunc <= exponent) return zero(trunc);
    std::vector<Coeff> v(static_cast<std::size_t>(trunc - exponent));
    v[0] = c;
    return TruncatedSeries(exponent, std::move(v));
  }

  static TruncatedSeries one(std::int64_t trunc) { return monomial(0, Coeff(1), trunc); }

  std::int64_t offset() const noexcept { return offset_; }
  std::int64_t trunc() const noexcept { return offset_ + static_cast<std::int64_t>(coeffs_.size()); }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::span<const Coeff> coeffs() const noexcept { return coeffs_; }
  std::vector<Coeff>& mutable_coeffs() noexcept { return coeffs_; }

  /// Strict accessor: offset <= n < trunc.
  const Coeff& coefficient(std::int64_t n) const {
    if (n < offset_ || n >= trunc()) {
      throw std::out_of_range("coefficient index " + std::to_string(n) + " outside defined range [" +
                              std::to_string(offset_) + ", " + std::to_string(trunc()) + ")");
    }
    return coeffs_[static_cast<std::size_t>(n - offset_)];
  }

  /// Coefficient for any n < trunc; zero below the stored offset.
  Coeff at(std::int64_t n) const {
    if (n >= trunc()) {
      throw TruncationError("coefficient q^" + std::to_string(n) + " requested from series truncated at q^" +
                            std::to_string(trunc()));
    }
    if (n < offset_) return Coeff(0);
    return coeffs_[static_cast<std::size_t>(n - offset_)];
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Coeff& c) { return c == 0; });
  }

  /// Exponent of the lowest nonzero coefficient; nullopt for a zero series.
  std::optional<std::int64_t> order() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) return offset_ + static_cast<std::int64_t>(i);
    }
    return std::nullopt;
  }

  /// Same value with leading zeros dropped (at least one coefficient kept).
  TruncatedSeries normalized() const {
    std::size_t skip = 0;
    while (skip + 1 < coeffs_.size() && coeffs_[skip] == 0) ++skip;
    if (skip == 0) return *this;
    return TruncatedSeries(offset_ + static_cast<std::int64_t>(skip),
                           std::vector<Coeff>(coeffs_.begin() + static_cast<std::ptrdiff_t>(skip), coeffs_.end()));
  }

  /// Forget everything at or beyond q^n (n may not exceed trunc).
  TruncatedSeries truncated(std::int64_t n) const {
    if (n > trunc()) {
      throw TruncationError("cannot extend series known to q^" + std::to_string(trunc()) + " up to q^" +
                            std::to_string(n));
    }
    if (n <= offset_) return zero(n);
    return TruncatedSeries(offset_, std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + (n - offset_)));
  }

  /// Same value re-based so that the stored range starts at `new_offset` (<= offset).
  TruncatedSeries with_offset(std::int64_t new_offset) const {
    if (new_offset > offset_) throw std::invalid_argument("with_offset: can only lower the stored offset");
    std::vector<Coeff> v(static_cast<std::size_t>(offset_ - new_offset));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return TruncatedSeries(new_offset, std::move(v));
  }

 private:
  std::int64_t offset_;
  std::vector<Coeff> coeffs_;
};

using QSeries = TruncatedSeries<Int>;
using QSeriesRat = TruncatedSeries<Rat>;

// ---------------------------------------------------------------------------
// Generic operations (both coefficient rings).

template <class C>
TruncatedSeries<C> add(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) {
  const std::int64_t lo = std::min(a.offset(), b.offset());
  const std::int64_t hi = std::min(a.trunc(), b.trunc());
  std::vector<C> out(static_cast<std::size_t>(hi - lo));
  for (std::int64_t n = std::max(lo, a.offset()); n < hi; ++n) out[n - lo] += a.coeffs()[n - a.offset()];
  for (std::int64_t n = std::max(lo, b.offset()); n < hi; ++n) out[n - lo] += b.coeffs()[n - b.offset()];
  return TruncatedSeries<C>(lo, std::move(out));
}

template <class C>
TruncatedSeries<C> neg(const TruncatedSeries<C>& a) {
  std::vector<C> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : out) c = -c;
  return TruncatedSeries<C>(a.offset(), std::move(out));
}

template <class C>
TruncatedSeries<C> sub(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) {
  return add(a, neg(b));
}

template <class C>
TruncatedSeries<C> scale(const TruncatedSeries<C>& a, const C& k) {
  std::vector<C> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : out) c *= k;
  return TruncatedSeries<C>(a.offset(), std::move(out));
}

/// Multiply by q^k; truncation shifts with it.
template <class C>
TruncatedSeries<C> shift(const TruncatedSeries<C>& a, std::int64_t k) {
  return TruncatedSeries<C>(a.offset() + k, std::vector<C>(a.coeffs().begin(), a.coeffs().end()));
}

/// Cauchy product in the generic ring. Result offset is the sum of the
/// normalized operand offsets; trunc = min(a.trunc + b.offset, b.trunc + a.offset).
template <class C>
TruncatedSeries<C> mul_generic(const TruncatedSeries<C>& a0, const TruncatedSeries<C>& b0) {
  const auto a = a0.normalized();
  const auto b = b0.normalized();
  const std::int64_t off = a.offset() + b.offset();
  const std::int64_t tr = std::min(a.trunc() + b.offset(), b.trunc() + a.offset());
  const std::size_t len = static_cast<std::size_t>(tr - off);
  std::vector<C> out(len);
  for (std::size_t i = 0; i < std::min(len, a.size()); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; i + j < len && j < b.size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return TruncatedSeries<C>(off, std::move(out));
}

template <class C>
TruncatedSeries<C> mul(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) {
  return mul_generic(a, b);
}

/// q -> q^k.
template <class C>
TruncatedSeries<C> substitute_power(const TruncatedSeries<C>& a, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("substitute_power: k must be positive");
  std::vector<C> out(a.size() * static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < a.size(); ++i) out[i * static_cast<std::size_t>(k)] = a.coeffs()[i];
  return TruncatedSeries<C>(a.offset() * k, std::move(out));
}

/// Σ a(m·n + r) q^n over all indices known in a.
template <class C>
TruncatedSeries<C> extract_progression(const TruncatedSeries<C>& a, std::int64_t m, std::int64_t r) {
  if (m < 1) throw std::invalid_argument("extract_progression: modulus must be positive");
  if (r < 0 || r >= m) throw std::invalid_argument("extract_progression: residue must lie in [0, m)");
  const std::int64_t tr = ceil_div(a.trunc() - r, m);
  std::int64_t off = ceil_div(a.offset() - r, m);
  if (off >= tr) off = tr - 1;
  std::vector<C> out(static_cast<std::size_t>(tr - off));
  for (std::int64_t n = off; n < tr; ++n) {
    const std::int64_t src = m * n + r;
    if (src >= a.offset()) out[n - off] = a.coeffs()[src - a.offset()];
  }
  return TruncatedSeries<C>(off, std::move(out));
}

/// Lowest exponent n < upto at which a and b differ, or nullopt if they
/// agree on [min offset, upto). Throws if either is not known to `upto`.
template <class C>
std::optional<std::int64_t> first_mismatch(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b,
                                           std::int64_t upto) {
  if (a.trunc() < upto || b.trunc() < upto) {
    throw TruncationError("comparison to q^" + std::to_string(upto) + " requested but operands are known only to q^" +
                          std::to_string(std::min(a.trunc(), b.trunc())));
  }
  for (std::int64_t n = std::min(a.offset(), b.offset()); n < upto; ++n) {
    if (a.at(n) != b.at(n)) return n;
  }
  return std::nullopt;
}

/// Coefficientwise equality on the common defined range.
template <class C>
bool operator==(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) {
  return !first_mismatch(a, b, std::min(a.trunc(), b.trunc())).has_value();
}

template <class C>
TruncatedSeries<C> operator+(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) { return add(a, b); }
template <class C>
TruncatedSeries<C> operator-(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) { return sub(a, b); }
template <class C>
TruncatedSeries<C> operator-(const TruncatedSeries<C>& a) { return neg(a); }

// ---------------------------------------------------------------------------
// Integer-coefficient kernel.

/// Cauchy product over the integers. Sparse operands use a direct scatter
/// loop; long dense operands go through the multi-modular kernel.
QSeries mul(const QSeries& a, const QSeries& b);
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }
inline QSeriesRat operator*(const QSeriesRat& a, const QSeriesRat& b) { return mul_generic(a, b); }

/// Inverse of a series whose lowest nonzero coefficient is ±1.
QSeries invert(const QSeries& a);

/// a / b where b has lowest nonzero coefficient ±1; exact.
QSeries divide(const QSeries& a, const QSeries& b);

/// a^k by repeated squaring; negative k inverts first.
QSeries pow(const QSeries& a, std::int64_t k);

/// Coefficients reduced to [0, M).
QSeries reduce_mod(const QSeries& a, const Int& modulus);

/// Minimum p-adic valuation over stored coefficients; nullopt (the
/// infinity marker) when every stored coefficient is zero. This is a lower
/// bound witnessed by the truncation, not a statement about the full series.
std::optional<unsigned> series_valuation(const QSeries& a, unsigned long p);

QSeriesRat to_rational(const QSeries& a);

/// Integer series if every coefficient is integral.
std::optional<QSeries> to_integral(const QSeriesRat& a);

/// Exact division of every coefficient by d; nullopt if some coefficient is not divisible.
std::optional<QSeries> divide_exact(const QSeries& a, const Int& d);

std::string to_string(const QSeries& a, std::size_t max_terms = 12);

namespace detail {

/// Reference Cauchy product; kept callable for equivalence tests.
QSeries mul_schoolbook(const QSeries& a, const QSeries& b);

/// Bit-exact multi-modular product (residues, vector kernel, CRT).
QSeries mul_multimodular(const QSeries& a, const QSeries& b);

}  // namespace detail

}  // namespace qcong
