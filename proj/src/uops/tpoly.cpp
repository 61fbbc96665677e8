#include <sstream>
#include <stdexcept>

#include "qcong/genfun.hpp"
#include "qcong/uops.hpp"

namespace qcong {

TPolynomial::TPolynomial(std::map<unsigned, Rat> coeffs, std::string generator)
    : coeffs_(std::move(coeffs)), generator_(std::move(generator)) {
  prune();
}

TPolynomial TPolynomial::monomial(unsigned power, const Rat& c, std::string generator) {
  return TPolynomial({{power, c}}, std::move(generator));
}

void TPolynomial::prune() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == 0) {
      it = coeffs_.erase(it);
    } else {
      it->second.canonicalize();
      ++it;
    }
  }
}

Rat TPolynomial::coefficient(unsigned power) const {
  const auto it = coeffs_.find(power);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

std::optional<unsigned> TPolynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.rbegin()->first;
}

bool TPolynomial::is_integral() const {
  for (const auto& [m, c] : coeffs_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

QSeriesRat TPolynomial::evaluate(const QSeries& g, std::int64_t N) const {
  QSeriesRat acc = QSeriesRat::zero(N);
  QSeries power = QSeries::one(N);
  unsigned at = 0;
  for (const auto& [m, c] : coeffs_) {
    while (at < m) {
      power = mul(power, g).with_offset(0).truncated(N);
      ++at;
    }
    acc = add(acc, scale(to_rational(power), c));
  }
  return acc.truncated(N);
}

TPolynomial TPolynomial::scaled(const Rat& k) const {
  std::map<unsigned, Rat> out;
  for (const auto& [m, c] : coeffs_) out[m] = c * k;
  return TPolynomial(std::move(out), generator_);
}

std::string TPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Rat ac = abs(c);
    if (m == 0) {
      os << ac;
      continue;
    }
    if (ac != 1) os << ac << "*";
    os << generator_;
    if (m != 1) os << "^" << m;
  }
  return os.str();
}

TPolynomial operator+(const TPolynomial& a, const TPolynomial& b) {
  std::map<unsigned, Rat> out = a.coeffs_;
  for (const auto& [m, c] : b.coeffs_) out[m] += c;
  return TPolynomial(std::move(out), a.generator_);
}

TPolynomial operator-(const TPolynomial& a, const TPolynomial& b) { return a + b.scaled(Rat(-1)); }

TPolynomial operator*(const TPolynomial& a, const TPolynomial& b) {
  std::map<unsigned, Rat> out;
  for (const auto& [m, c] : a.coeffs_) {
    for (const auto& [n, d] : b.coeffs_) out[m + n] += c * d;
  }
  return TPolynomial(std::move(out), a.generator_);
}

QSeries hauptmodul_t(std::int64_t N) { return expand_eta_quotient(EtaQuotient({{5, 6}, {1, -6}}), 0, N); }

QSeries weight_A(std::int64_t N) { return expand_eta_quotient(EtaQuotient({{25, 1}, {1, -1}}), 0, N); }

TPolynomial decompose_in_generator(const QSeriesRat& a, const QSeries& g, const std::string& name,
                                   std::optional<unsigned> degree_cap) {
  const std::int64_t T = a.trunc();
  if (T < 1) throw std::domain_error("decompose: series must be known past q^0");
  if (g.trunc() < T) throw TruncationError("decompose: generator known only to q^" + std::to_string(g.trunc()));
  const auto gorder = g.order();
  if (!gorder || *gorder != 1 || g.at(1) != 1) throw std::invalid_argument("decompose: generator must be q + O(q^2)");
  for (std::int64_t n = a.offset(); n < 0; ++n) {
    if (a.at(n) != 0) throw std::domain_error("not a polynomial in " + name + " at this truncation (pole at q^" +
                                              std::to_string(n) + ")");
  }
  const unsigned cap = degree_cap.value_or(static_cast<unsigned>((T - 1) / 2));

  std::vector<Rat> residual(static_cast<std::size_t>(T));
  for (std::int64_t n = std::max<std::int64_t>(0, a.offset()); n < T; ++n) residual[n] = a.at(n);

  std::map<unsigned, Rat> found;
  QSeries power = QSeries::one(T);
  for (std::int64_t e = 0; e < T; ++e) {
    if (e > 0) {
      if (static_cast<unsigned>(e) > cap) {
        for (std::int64_t n = e; n < T; ++n) {
          if (residual[n] != 0) {
            throw std::domain_error("not a polynomial in " + name + " at this truncation (residual at q^" +
                                    std::to_string(n) + ")");
          }
        }
        break;
      }
      power = mul(power, g).truncated(T);
    }
    if (residual[e] == 0) continue;
    const Rat c = residual[e];
    found[static_cast<unsigned>(e)] = c;
    const auto pc = power.coeffs();
    for (std::int64_t n = std::max(e, power.offset()); n < T; ++n) {
      const Int& pn = pc[static_cast<std::size_t>(n - power.offset())];
      if (pn != 0) residual[n] -= c * pn;
    }
  }
  return TPolynomial(std::move(found), name);
}

TPolynomial decompose_in_t(const QSeriesRat& a, std::optional<unsigned> degree_cap) {
  return decompose_in_generator(a, hauptmodul_t(std::max<std::int64_t>(a.trunc(), 2)), "t", degree_cap);
}

TPolynomial decompose_in_t(const QSeries& a, std::optional<unsigned> degree_cap) {
  return decompose_in_t(to_rational(a), degree_cap);
}

QSeries u5_plain(const QSeries& a) { return extract_progression(a, 5, 0); }

QSeries u5_weighted(const QSeries& a, const QSeries& weight) { return u5_plain(mul(weight, a)); }

QSeries u5_weighted(const QSeries& a) {
  const QSeries an = a.normalized();
  return u5_weighted(an, weight_A(std::max<std::int64_t>(an.trunc() - an.offset() + 1, 2)));
}

QSeries u5_alpha(unsigned alpha, const QSeries& a) { return alpha % 2 == 0 ? u5_weighted(a) : u5_plain(a); }

QSeries apply_u5(unsigned parity, const QSeries& a) {
  if (parity > 1) throw std::invalid_argument("apply_u5: parity must be 0 or 1");
  return parity == 0 ? u5_weighted(a) : u5_plain(a);
}

}  // namespace qcong
