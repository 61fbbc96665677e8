#include "qcong/series.hpp"

#include <sstream>

namespace qcong {

namespace {

// Below this length the GMP schoolbook product wins over residue packing.
constexpr std::size_t kMultimodularThreshold = 48;

std::size_t count_nonzero(std::span<const Int> c, std::size_t len) {
  std::size_t nnz = 0;
  for (std::size_t i = 0; i < std::min(len, c.size()); ++i) nnz += (c[i] != 0);
  return nnz;
}

// Scatter-multiply a sparse series into a dense one. `sparse` and `dense`
// are already normalized; output has length len.
std::vector<Int> mul_sparse(const QSeries& sparse, const QSeries& dense, std::size_t len) {
  std::vector<Int> out(len);
  const auto s = sparse.coeffs();
  const auto d = dense.coeffs();
  for (std::size_t i = 0; i < std::min(len, s.size()); ++i) {
    const Int& c = s[i];
    if (c == 0) continue;
    const std::size_t n = std::min(len - i, d.size());
    if (c == 1) {
      for (std::size_t j = 0; j < n; ++j) out[i + j] += d[j];
    } else if (c == -1) {
      for (std::size_t j = 0; j < n; ++j) out[i + j] -= d[j];
    } else {
      for (std::size_t j = 0; j < n; ++j) mpz_addmul(out[i + j].get_mpz_t(), c.get_mpz_t(), d[j].get_mpz_t());
    }
  }
  return out;
}

struct ProductShape {
  QSeries a, b;
  std::int64_t offset;
  std::size_t len;
};

ProductShape shape_of(const QSeries& a0, const QSeries& b0) {
  ProductShape s{a0.normalized(), b0.normalized(), 0, 0};
  s.offset = s.a.offset() + s.b.offset();
  const std::int64_t tr = std::min(s.a.trunc() + s.b.offset(), s.b.trunc() + s.a.offset());
  s.len = static_cast<std::size_t>(tr - s.offset);
  return s;
}

}  // namespace

namespace detail {

QSeries mul_schoolbook(const QSeries& a0, const QSeries& b0) {
  auto s = shape_of(a0, b0);
  return QSeries(s.offset, mul_sparse(s.a, s.b, s.len));
}

// mul_multimodular lives in multimod.cpp; it shares shape_of's contract.

}  // namespace detail

QSeries mul(const QSeries& a0, const QSeries& b0) {
  auto s = shape_of(a0, b0);
  const std::size_t nnz_a = count_nonzero(s.a.coeffs(), s.len);
  const std::size_t nnz_b = count_nonzero(s.b.coeffs(), s.len);
  if (nnz_a * 8 <= s.len) return QSeries(s.offset, mul_sparse(s.a, s.b, s.len));
  if (nnz_b * 8 <= s.len) return QSeries(s.offset, mul_sparse(s.b, s.a, s.len));
  if (s.len >= kMultimodularThreshold) return detail::mul_multimodular(s.a, s.b);
  return QSeries(s.offset, mul_sparse(s.a, s.b, s.len));
}

QSeries divide(const QSeries& a0, const QSeries& b0) {
  const QSeries a = a0.normalized();
  const QSeries b = b0.normalized();
  const Int& lead = b.coeffs()[0];
  if (lead != 1 && lead != -1) throw std::domain_error("not invertible over the integers");
  const std::int64_t vb = b.offset();
  const std::int64_t off = a.offset() - vb;
  // a/b = a · b^{-1}; b^{-1} is known to q^(b.trunc - 2 vb).
  const std::int64_t tr = std::min(a.trunc() - vb, b.trunc() - 2 * vb + a.offset());
  const std::size_t len = static_cast<std::size_t>(std::max<std::int64_t>(tr - off, 1));

  std::vector<std::size_t> support;
  for (std::size_t k = 1; k < std::min(len, b.size()); ++k) {
    if (b.coeffs()[k] != 0) support.push_back(k);
  }
  std::vector<Int> out(len);
  for (std::size_t n = 0; n < len; ++n) {
    Int acc = n < a.size() ? a.coeffs()[n] : Int(0);
    for (std::size_t k : support) {
      if (k > n) break;
      const Int& bk = b.coeffs()[k];
      if (bk == 1) {
        acc -= out[n - k];
      } else if (bk == -1) {
        acc += out[n - k];
      } else {
        mpz_submul(acc.get_mpz_t(), bk.get_mpz_t(), out[n - k].get_mpz_t());
      }
    }
    if (lead == -1) acc = -acc;
    out[n] = std::move(acc);
  }
  return QSeries(off, std::move(out));
}

QSeries invert(const QSeries& a) {
  const QSeries an = a.normalized();
  const std::int64_t v = an.offset();
  return divide(QSeries::one(an.trunc() - 2 * v + v), an);
}

QSeries pow(const QSeries& a, std::int64_t k) {
  if (k < 0) return pow(invert(a), -k);
  const QSeries an = a.normalized();
  QSeries result = QSeries::one(an.trunc() - an.offset());
  if (k == 0) return result;
  QSeries base = an;
  bool first = true;
  while (k > 0) {
    if (k & 1) {
      result = first ? base : mul(result, base);
      first = false;
    }
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

QSeries reduce_mod(const QSeries& a, const Int& modulus) {
  if (modulus < 2) throw std::invalid_argument("reduce_mod: modulus must be at least 2");
  std::vector<Int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_fdiv_r(out[i].get_mpz_t(), a.coeffs()[i].get_mpz_t(), modulus.get_mpz_t());
  return QSeries(a.offset(), std::move(out));
}

std::optional<unsigned> series_valuation(const QSeries& a, unsigned long p) {
  std::optional<unsigned> best;
  for (const Int& c : a.coeffs()) {
    auto v = valuation(c, p);
    if (v && (!best || *v < *best)) best = v;
    if (best && *best == 0) break;
  }
  return best;
}

QSeriesRat to_rational(const QSeries& a) {
  std::vector<Rat> out;
  out.reserve(a.size());
  for (const Int& c : a.coeffs()) out.emplace_back(c);
  return QSeriesRat(a.offset(), std::move(out));
}

std::optional<QSeries> to_integral(const QSeriesRat& a) {
  std::vector<Int> out;
  out.reserve(a.size());
  for (const Rat& c : a.coeffs()) {
    if (c.get_den() != 1) return std::nullopt;
    out.emplace_back(c.get_num());
  }
  return QSeries(a.offset(), std::move(out));
}

std::optional<QSeries> divide_exact(const QSeries& a, const Int& d) {
  if (d == 0) throw std::invalid_argument("divide_exact: division by zero");
  std::vector<Int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!mpz_divisible_p(a.coeffs()[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
    mpz_divexact(out[i].get_mpz_t(), a.coeffs()[i].get_mpz_t(), d.get_mpz_t());
  }
  return QSeries(a.offset(), std::move(out));
}

std::string to_string(const QSeries& a, std::size_t max_terms) {
  std::ostringstream os;
  std::size_t shown = 0;
  for (std::size_t i = 0; i < a.size() && shown < max_terms; ++i) {
    const Int& c = a.coeffs()[i];
    if (c == 0) continue;
    const std::int64_t e = a.offset() + static_cast<std::int64_t>(i);
    if (shown > 0) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Int ac = abs(c);
    if (ac != 1 || e == 0) os << ac;
    if (e != 0) os << (ac != 1 ? "*" : "") << "q" << (e != 1 ? "^" + std::to_string(e) : "");
    ++shown;
  }
  if (shown == 0) os << "0";
  os << " + O(q^" << a.trunc() << ")";
  return os.str();
}

}  // namespace qcong
