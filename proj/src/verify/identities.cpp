#include <stdexcept>

#include "qcong/genfun.hpp"
#include "qcong/uops.hpp"
#include "qcong/verify.hpp"

namespace qcong {

namespace {

std::string opening(const QSeries& s, std::size_t k) { return to_string(s.truncated(std::min<std::int64_t>(s.trunc(), s.offset() + static_cast<std::int64_t>(k))), k); }

void compare(IdentityReport& rep, const QSeries& lhs, const QSeries& rhs) {
  rep.first_mismatch = first_mismatch(lhs, rhs, rep.trunc);
  CheckResult c{"sides agree to q^" + std::to_string(rep.trunc), !rep.first_mismatch, ""};
  if (rep.first_mismatch) {
    const std::int64_t e = *rep.first_mismatch;
    c.details = "first mismatch at q^" + std::to_string(e) + ": " + lhs.at(e).get_str() + " vs " + rhs.at(e).get_str();
  } else {
    c.details = "left side " + opening(lhs, 4);
  }
  rep.checks.push_back(std::move(c));
}

void finish(IdentityReport& rep) {
  rep.passed = true;
  for (const auto& c : rep.checks) rep.passed = rep.passed && c.passed;
}

// Σ p(5n+4) q^n = 5 (q^5;q^5)^5 / (q;q)^6
IdentityReport p5n4(std::int64_t N) {
  IdentityReport rep{"p5n4", N, false, std::nullopt, {}};
  const QSeries lhs = extract_progression(partition_series(5 * N), 5, 4);
  const QSeries rhs = scale(product_expansion({{5, 5}, {1, -6}}, N), Int(5));
  compare(rep, lhs, rhs);
  const bool opens = lhs.at(0) == 5 && lhs.at(1) == 30 && lhs.at(2) == 135;
  rep.checks.push_back({"opening coefficients 5, 30, 135", opens, opening(lhs, 3)});
  const auto v = series_valuation(lhs, 5);
  rep.checks.push_back({"uniform 5-adic valuation >= 1", v && *v >= 1, "min valuation " + (v ? std::to_string(*v) : std::string("inf"))});
  finish(rep);
  return rep;
}

// (q^5;q^5) Σ p(5n+4) q^(n+1) = 5t
IdentityReport p5n4_in_t(std::int64_t N) {
  IdentityReport rep{"p5n4_in_t", N, false, std::nullopt, {}};
  const QSeries lhs = ladder_term(1, N);
  const QSeries rhs = scale(hauptmodul_t(N), Int(5));
  compare(rep, lhs, rhs);
  const TPolynomial d = decompose_in_t(lhs);
  rep.checks.push_back({"decomposes as 5t", d == TPolynomial::monomial(1, Rat(5)), d.to_string()});
  finish(rep);
  return rep;
}

// 2 (q^11;q^11) Σ p(11n+6) q^(n+1)
//   = 11^3 (2 f3^2 + U2(f2^2)) + 77 (f2 - 4 U2(f3)) - 22 (f3 - U2(f2)) + 2·11^4 z
IdentityReport p11n6(std::int64_t N) {
  IdentityReport rep{"p11n6", N, false, std::nullopt, {}};
  const std::int64_t M = 2 * N + 2;
  const QSeries f2 = expand_eta_quotient(EtaQuotient({{11, 3}, {22, 1}, {1, -1}, {2, -3}}), 0, M);
  const QSeries f3 = expand_eta_quotient(EtaQuotient({{11, 1}, {22, 3}, {1, -3}, {2, -1}}), 0, M);
  const QSeries z = expand_eta_quotient(EtaQuotient({{11, 12}, {1, -12}}), 0, N);
  auto U2 = [N](const QSeries& a) { return extract_progression(a, 2, 0).truncated(N); };
  auto low = [N](const QSeries& a) { return a.truncated(N); };

  const QSeries p = partition_series(11 * N + 6);
  std::vector<Int> s(static_cast<std::size_t>(N - 1));
  for (std::int64_t n = 0; n + 1 < N; ++n) s[n] = p.coeffs()[static_cast<std::size_t>(11 * n + 6)];
  const QSeries phi = substitute_power(euler_product(N / 11 + 1), 11).truncated(N);
  const QSeries lhs = scale(mul(phi, QSeries(1, std::move(s))), Int(2));

  const QSeries f3sq = mul(low(f3), low(f3)).truncated(N);
  const QSeries rhs = add(add(scale(add(scale(f3sq, Int(2)), U2(mul(f2, f2))), Int(1331)),
                              scale(sub(low(f2), scale(U2(f3), Int(4))), Int(77))),
                          add(scale(sub(low(f3), U2(f2)), Int(-22)), scale(z, Int(2 * 14641))));
  compare(rep, lhs.truncated(N), rhs.truncated(N));

  const QSeries y11 = sub(scale(U2(f3), Int(4)), low(f2));
  const auto y = divide_exact(y11, Int(11));
  rep.checks.push_back({"(4 U2(f3) - f2)/11 is integral", y.has_value(), y ? "y = " + opening(*y, 5) : "not divisible by 11"});
  const QSeries x = sub(U2(f2), low(f3));
  rep.checks.push_back({"x = U2(f2) - f3", true, "x = " + opening(x, 5)});
  finish(rep);
  return rep;
}

}  // namespace

std::vector<std::string> identity_names() { return {"p5n4", "p5n4_in_t", "p11n6"}; }

IdentityReport verify_identity(const std::string& name, std::int64_t N) {
  if (N < 4) throw std::invalid_argument("verify_identity: N must be at least 4");
  if (name == "p5n4") return p5n4(N);
  if (name == "p5n4_in_t") return p5n4_in_t(N);
  if (name == "p11n6") return p11n6(N);
  throw std::invalid_argument("unknown identity '" + name + "'; valid names: p5n4, p5n4_in_t, p11n6");
}

}  // namespace qcong
