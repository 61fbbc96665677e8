#include <charconv>
#include <optional>
#include <stdexcept>

#include "qcong/genfun.hpp"

namespace qcong {

namespace {

QSeries colored(std::int64_t k, std::int64_t N) { return product_expansion({{1, -k}}, N); }

QSeries distinct_parts(std::int64_t N) { return product_expansion({{2, 1}, {1, -1}}, N); }

QSeries elongated(std::int64_t k, std::int64_t N) { return product_expansion({{2, k}, {1, -(3 * k + 1)}}, N); }

QSeries frobenius2(std::int64_t N) { return product_expansion({{2, 5}, {1, -4}, {4, -2}}, N); }

// (2 E2(2τ) - E2(τ)) / (q^2; q^2)_∞
QSeries wang_yang(std::int64_t N) {
  const QSeries e2 = eisenstein(EisensteinKind::E2, N);
  const QSeries e2_doubled = substitute_power(eisenstein(EisensteinKind::E2, (N + 1) / 2), 2).truncated(N);
  const QSeries numerator = sub(scale(e2_doubled, Int(2)), e2);
  return mul(numerator, product_expansion({{2, -1}}, N));
}

// E4^3 / Δ with Δ = q ∏(1 - q^m)^24; offset -1.
QSeries j_invariant(std::int64_t N) {
  const std::int64_t M = N + 1;
  const QSeries e4 = eisenstein(EisensteinKind::E4, M);
  const QSeries cube = mul(mul(e4, e4), e4);
  return shift(mul(cube, product_expansion({{1, -24}}, M)), -1);
}

// q·ω(q), ω(q) = Σ_n q^(2n²+2n) / (q; q²)²_{n+1}. Terms with 2n²+2n >= N-1
// vanish below the truncation and are dropped.
QSeries mock_omega(std::int64_t N) {
  const std::int64_t M = N - 1;
  if (M < 1) return QSeries::zero(N);
  std::vector<Int> total(static_cast<std::size_t>(M));
  // running = 1 / ∏_{j<=n} (1 - q^(2j+1))^2
  std::vector<Int> running(static_cast<std::size_t>(M));
  running[0] = 1;
  for (std::int64_t n = 0; 2 * n * n + 2 * n < M; ++n) {
    const std::int64_t step = 2 * n + 1;
    for (int rep = 0; rep < 2; ++rep) {
      for (std::int64_t k = step; k < M; ++k) running[k] += running[k - step];
    }
    const std::int64_t start = 2 * n * n + 2 * n;
    for (std::int64_t k = start; k < M; ++k) total[k] += running[k - start];
  }
  return shift(QSeries(0, std::move(total)), 1).with_offset(0);
}

struct ParsedName {
  std::string base;
  std::optional<std::int64_t> param;
};

ParsedName parse_name(std::string_view name) {
  const auto open = name.find('(');
  if (open == std::string_view::npos) return {std::string(name), std::nullopt};
  if (name.back() != ')') throw std::invalid_argument("malformed catalog name: " + std::string(name));
  const auto inner = name.substr(open + 1, name.size() - open - 2);
  std::int64_t k = 0;
  const auto [ptr, ec] = std::from_chars(inner.data(), inner.data() + inner.size(), k);
  if (ec != std::errc() || ptr != inner.data() + inner.size() || k < 0) {
    throw std::invalid_argument("malformed catalog parameter in " + std::string(name));
  }
  return {std::string(name.substr(0, open)), k};
}

}  // namespace

const std::vector<NamedSeries>& catalog() {
  static const std::vector<NamedSeries> entries = {
      {"partition", "Σ p(n) q^n = 1/(q;q)_∞", false, [](std::int64_t, std::int64_t N) { return partition_series(N); }},
      {"colored(k)", "k-colored partitions, (q;q)_∞^(-k)", true, colored},
      {"distinct", "partitions into distinct parts, (q^2;q^2)_∞/(q;q)_∞", false,
       [](std::int64_t, std::int64_t N) { return distinct_parts(N); }},
      {"elongated(k)", "k-elongated plane partitions, (q^2;q^2)^k/(q;q)^(3k+1)", true, elongated},
      {"frobenius2", "generalized 2-color Frobenius partitions, (q^2;q^2)^5/((q;q)^4 (q^4;q^4)^2)", false,
       [](std::int64_t, std::int64_t N) { return frobenius2(N); }},
      {"wangyang", "(2E2(2τ) - E2(τ)) / (q^2;q^2)_∞", false, [](std::int64_t, std::int64_t N) { return wang_yang(N); }},
      {"jinvariant", "j = E4^3/Δ = q^-1 + 744 + 196884 q + ...", false,
       [](std::int64_t, std::int64_t N) { return j_invariant(N); }},
      {"mock_omega", "q·ω(q), third order mock theta function", false,
       [](std::int64_t, std::int64_t N) { return mock_omega(N); }},
  };
  return entries;
}

std::string catalog_names() {
  std::string s;
  for (const auto& e : catalog()) {
    if (!s.empty()) s += ", ";
    s += e.name;
  }
  return s;
}

namespace {

const NamedSeries* lookup(std::string_view name, std::int64_t& param) {
  ParsedName parsed;
  try {
    parsed = parse_name(name);
  } catch (const std::invalid_argument&) {
    return nullptr;
  }
  for (const auto& e : catalog()) {
    const std::string key = e.name.substr(0, e.name.find('('));
    if (key == parsed.base && e.parameterized == parsed.param.has_value()) {
      param = parsed.param.value_or(0);
      return &e;
    }
  }
  return nullptr;
}

}  // namespace

bool is_catalog_name(std::string_view name) {
  std::int64_t param = 0;
  return lookup(name, param) != nullptr;
}

QSeries expand_named(std::string_view name, std::int64_t N) {
  if (N < 1) throw std::invalid_argument("expand_named: N must be positive");
  std::int64_t param = 0;
  const NamedSeries* entry = lookup(name, param);
  if (entry == nullptr) {
    throw std::invalid_argument("unknown series '" + std::string(name) + "'; valid names: " + catalog_names());
  }
  return entry->build(param, N);
}

}  // namespace qcong
