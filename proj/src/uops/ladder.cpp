#include <stdexcept>

#include "qcong/genfun.hpp"
#include "qcong/uops.hpp"

namespace qcong {

namespace {

constexpr unsigned kMaxLadderDepth = 25;

std::int64_t pow5(unsigned alpha) {
  std::int64_t r = 1;
  for (unsigned i = 0; i < alpha; ++i) r *= 5;
  return r;
}

}  // namespace

std::int64_t ladder_lambda(unsigned alpha) {
  if (alpha < 1 || alpha > kMaxLadderDepth) throw std::invalid_argument("ladder_lambda: alpha out of range");
  std::int64_t lambda = inverse_mod(24, 5);
  std::int64_t modulus = 5;
  for (unsigned k = 2; k <= alpha; ++k) {
    const std::int64_t next = modulus * 5;
    std::int64_t lifted = -1;
    for (std::int64_t j = 0; j < 5; ++j) {
      const std::int64_t c = lambda + j * modulus;
      if ((24 * c) % next == 1) {
        lifted = c;
        break;
      }
    }
    if (lifted < 0) throw std::logic_error("ladder_lambda: lift failed");
    lambda = lifted;
    modulus = next;
  }
  return lambda;
}

std::int64_t ladder_required_index(unsigned alpha, std::int64_t N) {
  if (N < 2) return 0;
  return pow5(alpha) * (N - 2) + ladder_lambda(alpha);
}

QSeries ladder_term(unsigned alpha, std::int64_t N, std::int64_t budget) {
  if (alpha < 1 || alpha > kMaxLadderDepth) throw std::invalid_argument("ladder_term: alpha out of range");
  if (N < 2) return QSeries::zero(std::max<std::int64_t>(N, 1));
  const std::int64_t need = ladder_required_index(alpha, N);
  if (need > budget) {
    throw BudgetError("ladder L_" + std::to_string(alpha) + " to q^" + std::to_string(N) + " needs p(" +
                      std::to_string(need) + "), beyond the coefficient budget " + std::to_string(budget));
  }
  const QSeries p = partition_series(need + 1);
  const std::int64_t step = pow5(alpha);
  const std::int64_t lambda = ladder_lambda(alpha);
  std::vector<Int> s(static_cast<std::size_t>(N - 1));
  for (std::int64_t n = 0; n + 1 < N; ++n) s[n] = p.coeffs()[static_cast<std::size_t>(step * n + lambda)];
  const QSeries phi = alpha % 2 == 1 ? substitute_power(euler_product(N / 5 + 1), 5).truncated(N) : euler_product(N);
  return mul(phi, QSeries(1, std::move(s)));
}

StepReport ladder_step_check(unsigned alpha, std::int64_t N, std::optional<QSeries> weight_override,
                             std::int64_t budget) {
  StepReport rep;
  rep.alpha = alpha;
  rep.trunc = N;
  const QSeries lhs_in = ladder_term(alpha, 5 * N, budget);
  QSeries image;
  if (alpha % 2 == 1) {
    image = u5_plain(lhs_in);
  } else {
    const QSeries w = weight_override ? *weight_override : weight_A(5 * N);
    image = u5_weighted(lhs_in, w);
  }
  const QSeries rhs = ladder_term(alpha + 1, N, budget);
  if (image.trunc() < N) {
    rep.detail = "operator image known only to q^" + std::to_string(image.trunc());
    return rep;
  }
  rep.first_mismatch = first_mismatch(image, rhs, N);
  rep.passed = !rep.first_mismatch;
  if (rep.passed) {
    rep.detail = "U5^(" + std::to_string(alpha) + ")(L_" + std::to_string(alpha) + ") = L_" +
                 std::to_string(alpha + 1) + " to q^" + std::to_string(N);
  } else {
    const std::int64_t e = *rep.first_mismatch;
    rep.detail = "first mismatch at q^" + std::to_string(e) + ": operator side " + image.at(e).get_str() +
                 ", direct side " + rhs.at(e).get_str();
  }
  return rep;
}

}  // namespace qcong
