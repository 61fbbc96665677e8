#include <cmath>
#include <stdexcept>

#include "precision.hpp"

namespace qcong {

namespace {

ComplexReal cmul(const ComplexReal& x, const ComplexReal& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

ComplexReal cdiv(const ComplexReal& x, const ComplexReal& y) {
  const Real d = y.re * y.re + y.im * y.im;
  return {(x.re * y.re + x.im * y.im) / d, (x.im * y.re - x.re * y.im) / d};
}

ComplexReal expi(const Real& theta) { return {cos(theta), sin(theta)}; }

// Principal square root.
ComplexReal csqrt(const ComplexReal& z) {
  const Real r = sqrt(z.re * z.re + z.im * z.im);
  Real re = sqrt((r + z.re) / 2);
  Real im = sqrt((r - z.re) / 2);
  if (z.im < 0) im = -im;
  return {re, im};
}

Real cabs(const ComplexReal& z) { return sqrt(z.re * z.re + z.im * z.im); }

ComplexReal eta_at_precision(const ComplexReal& tau, unsigned bits) {
  const Real pi = detail::pi_constant();
  const std::int64_t M = eta_factor_count(tau.im, bits);
  const Real mod_q = exp(-2 * pi * tau.im);
  const ComplexReal q = cmul({mod_q, Real(0)}, expi(2 * pi * tau.re));
  ComplexReal prod{Real(1), Real(0)};
  ComplexReal qm = q;
  for (std::int64_t m = 1; m <= M; ++m) {
    prod = cmul(prod, {1 - qm.re, -qm.im});
    qm = cmul(qm, q);
  }
  const ComplexReal pre = cmul({exp(-pi * tau.im / 12), Real(0)}, expi(pi * tau.re / 12));
  return cmul(pre, prod);
}

}  // namespace

// |q|^M <= 2^-(bits+16) with |q| = e^(-2π Im τ).
std::int64_t eta_factor_count(const Real& im_tau, unsigned bits) {
  const double y = static_cast<double>(im_tau);
  return static_cast<std::int64_t>(std::ceil((bits + 16) * std::log(2.0) / (2 * M_PI * y))) + 1;
}

ComplexReal eta_numeric(const ComplexReal& tau, unsigned bits) {
  if (!(tau.im > 0)) throw std::domain_error("eta_numeric: Im(tau) must be positive");
  detail::PrecisionScope scope(bits + 32);
  return eta_at_precision({detail::at_working(tau.re), detail::at_working(tau.im)}, bits);
}

std::vector<SL2Z> eta_panel() { return {{1, 1, 0, 1}, {0, -1, 1, 0}, {1, 0, 1, 1}, {2, 1, 1, 1}, {3, 1, 5, 2}}; }

EtaTransformReport check_eta_transformation(const SL2Z& g, const ComplexReal& tau, unsigned bits) {
  if (g.a * g.d - g.b * g.c != 1) throw std::invalid_argument("check_eta_transformation: determinant must be 1");
  if (g.c < 0 || (g.c == 0 && g.d != 1)) {
    throw std::invalid_argument("check_eta_transformation: only c > 0, or c = 0 with d = 1, is covered");
  }
  if (!(tau.im > 0)) throw std::domain_error("check_eta_transformation: Im(tau) must be positive");
  detail::PrecisionScope scope(bits + 32);
  const Real pi = detail::pi_constant();
  const ComplexReal z{detail::at_working(tau.re), detail::at_working(tau.im)};

  const ComplexReal num{g.a * z.re + g.b, g.a * z.im};
  const ComplexReal den{g.c * z.re + g.d, g.c * z.im};
  const ComplexReal image = cdiv(num, den);
  const ComplexReal lhs = eta_at_precision(image, bits);
  const ComplexReal base = eta_at_precision(z, bits);

  EtaTransformReport rep;
  rep.gamma = g;
  ComplexReal rhs;
  if (g.c == 0) {
    rep.branch = "c = 0, d = 1: e^(b pi i/12)";
    rhs = cmul(expi(pi * g.b / 12), base);
  } else {
    rep.branch = "c > 0: e^(pi i ((a+d)/(12c) - s(d,c))) (-i(c tau + d))^(1/2)";
    Rat lead(Int(g.a + g.d), Int(12 * g.c));
    lead.canonicalize();
    const Rat theta = lead - dedekind_sum(DedekindSumArgs(g.d, g.c));
    const ComplexReal eps = expi(pi * detail::from_rational(theta));
    const ComplexReal w{den.im, -den.re};  // -i(cτ + d)
    rhs = cmul(cmul(eps, csqrt(w)), base);
  }
  const ComplexReal diff{lhs.re - rhs.re, lhs.im - rhs.im};
  rep.relative_error = cabs(diff) / cabs(lhs);
  rep.relative_error_double = static_cast<double>(rep.relative_error);
  return rep;
}

}  // namespace qcong
