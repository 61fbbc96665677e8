#include <stdexcept>

#include "qcong/genfun.hpp"
#include "qcong/uops.hpp"
#include "qcong/verify.hpp"

namespace qcong {

namespace {

const std::vector<EtaFactor> kFrobenius2 = {{2, 5}, {1, -4}, {4, -2}};

QSeries weight_series(EigenWeight kind, std::int64_t T) {
  if (kind == EigenWeight::eta_ratio_25) {
    std::vector<EtaFactor> f = kFrobenius2;
    for (const auto& e : kFrobenius2) f.push_back({25 * e.scale, -e.exponent});
    return expand_eta_quotient(EtaQuotient(f), 0, T);
  }
  const QSeries num = product_expansion(kFrobenius2, T);
  const QSeries den = substitute_power(product_expansion(kFrobenius2, T / 5 + 1), 5).truncated(T);
  return divide(num, den);
}

}  // namespace

EigenSetup make_eigen_setup(std::int64_t n_out, EigenWeight kind) {
  if (n_out < 6) throw std::invalid_argument("make_eigen_setup: output order must be at least 6");
  EigenSetup s;
  s.trunc = 25 * n_out;
  s.weight_kind = kind;
  s.x = expand_eta_quotient(EtaQuotient({{2, 1}, {10, 3}, {1, -3}, {5, -1}}), 0, s.trunc);
  s.y = expand_eta_quotient(EtaQuotient({{2, 2}, {4, 1}, {5, 1}, {20, 3}, {1, -5}, {10, -2}}), 0, s.trunc);
  s.t = add(s.y, scale(mul(s.x, s.y), Int(4))).truncated(s.trunc);
  s.weight = weight_series(kind, s.trunc);
  return s;
}

QSeries eigen_u1(const EigenSetup&, const QSeries& f) { return u5_plain(f); }

QSeries eigen_u0(const EigenSetup& s, const QSeries& f) { return u5_weighted(f, s.weight); }

EigenReport eigen_detect(const EigenSetup& s, const QSeries& f, std::int64_t n_out) {
  EigenReport rep;
  rep.trunc = n_out;
  const QSeries image = eigen_u0(s, eigen_u1(s, f));
  if (image.trunc() < n_out) {
    throw TruncationError("composite operator image known only to q^" + std::to_string(image.trunc()) +
                          ", requested q^" + std::to_string(n_out));
  }
  const Int five(5);
  const QSeries fm = reduce_mod(f.truncated(n_out), five);
  rep.first_mismatch = first_mismatch(reduce_mod(image.truncated(n_out), five), fm, n_out);
  rep.fixed_mod_p = !rep.first_mismatch;
  rep.nonzero_mod_p = !fm.is_zero();
  return rep;
}

EigenReport eigen_check(const EigenSetup& s, std::int64_t n_out) {
  EigenReport rep = eigen_detect(s, s.t, n_out);
  rep.opening_matches =
      s.t.at(0) == 0 && s.t.at(1) == 0 && s.t.at(2) == 1 && s.t.at(3) == 9 && s.t.at(4) == 50 && s.t.at(5) == 219;
  return rep;
}

}  // namespace qcong
