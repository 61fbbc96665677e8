#include <atomic>
#include <stdexcept>
#include <thread>

#include "qcong/genfun.hpp"
#include "qcong/verify.hpp"

namespace qcong {

std::string ExponentRule::describe() const {
  std::string s;
  auto term = [&s](std::int64_t k, const std::string& sym) {
    if (k == 0) return;
    if (!s.empty()) s += k < 0 ? "-" : "+";
    else if (k < 0) s += "-";
    const std::int64_t ak = k < 0 ? -k : k;
    if (ak != 1 || sym.empty()) s += std::to_string(ak);
    s += sym;
  };
  term(a, "α");
  term(b, "⌊α/2⌋");
  term(c, "");
  return s.empty() ? "0" : s;
}

const std::vector<CongruenceFamily>& family_catalog() {
  static const std::vector<CongruenceFamily> families = [] {
    std::vector<CongruenceFamily> v;
    auto add = [&v](CongruenceFamily f) { v.push_back(std::move(f)); };
    add({"ram5", "partition", "24n ≡ 1 (mod 5^α) ⇒ p(n) ≡ 0 (mod 5^α)", 24, 1, 5, {1, 0, 0}, {1, 0, 0}, 0, 4});
    add({"ram7", "partition", "24n ≡ 1 (mod 7^α) ⇒ p(n) ≡ 0 (mod 7^(⌊α/2⌋+1))", 24, 1, 7, {1, 0, 0}, {0, 1, 1}, 0,
         3});
    add({"ram11", "partition", "24n ≡ 1 (mod 11^α) ⇒ p(n) ≡ 0 (mod 11^α)", 24, 1, 11, {1, 0, 0}, {1, 0, 0}, 0, 2});
    add({"j2", "jinvariant", "n ≡ 0 (mod 2^α) ⇒ c(n) ≡ 0 (mod 2^(3α+8))", 1, 0, 2, {1, 0, 0}, {3, 0, 8}, 1, 1});
    add({"j3", "jinvariant", "n ≡ 0 (mod 3^α) ⇒ c(n) ≡ 0 (mod 3^(2α+3))", 1, 0, 3, {1, 0, 0}, {2, 0, 3}, 1, 1});
    add({"j5", "jinvariant", "n ≡ 0 (mod 5^α) ⇒ c(n) ≡ 0 (mod 5^(α+1))", 1, 0, 5, {1, 0, 0}, {1, 0, 1}, 1, 2});
    add({"j7", "jinvariant", "n ≡ 0 (mod 7^α) ⇒ c(n) ≡ 0 (mod 7^α)", 1, 0, 7, {1, 0, 0}, {1, 0, 0}, 1, 2});
    add({"j11", "jinvariant", "n ≡ 0 (mod 11^α) ⇒ c(n) ≡ 0 (mod 11^α)", 1, 0, 11, {1, 0, 0}, {1, 0, 0}, 1, 2});
    add({"tang", "colored(2)", "12n ≡ 1 (mod 5^α) ⇒ p_{-2}(n) ≡ 0 (mod 5^(⌊α/2⌋+1))", 12, 1, 5, {1, 0, 0}, {0, 1, 1},
         0, 3});
    add({"chern_hirschhorn", "distinct", "24n ≡ -1 (mod 5^(2α+1)) ⇒ p_D(n) ≡ 0 (mod 5^α)", 24, -1, 5, {2, 0, 1},
         {1, 0, 0}, 0, 2});
    add({"wang_yang", "wangyang", "12n ≡ 1 (mod 5^α) ⇒ c(n) ≡ 0 (mod 5^α)", 12, 1, 5, {1, 0, 0}, {1, 0, 0}, 0, 3});
    add({"andrews_paule", "elongated(2)", "8n ≡ 1 (mod 3^α) ⇒ d_2(n) ≡ 0 (mod 3^(2⌊α/2⌋+1))", 8, 1, 3, {1, 0, 0},
         {0, 2, 1}, 0, 4});
    add({"andrews_sellers", "frobenius2", "12n ≡ 1 (mod 5^α) ⇒ cφ2(n) ≡ 0 (mod 5^α)", 12, 1, 5, {1, 0, 0}, {1, 0, 0},
         0, 3});
    return v;
  }();
  return families;
}

std::string family_names() {
  std::string s;
  for (const auto& f : family_catalog()) {
    if (!s.empty()) s += ", ";
    s += f.name;
  }
  return s;
}

const CongruenceFamily& find_family(const std::string& name) {
  for (const auto& f : family_catalog()) {
    if (f.name == name) return f;
  }
  throw std::invalid_argument("unknown family '" + name + "'; valid names: " + family_names());
}

namespace {

std::int64_t ipow64(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    if (r > (std::int64_t{1} << 62) / b) throw std::overflow_error("condition modulus overflows 64 bits");
    r *= b;
  }
  return r;
}

}  // namespace

std::vector<std::int64_t> family_indices(const CongruenceFamily& f, unsigned alpha, std::size_t count) {
  const std::int64_t M = ipow64(f.prime, f.condition(alpha));
  const std::int64_t inv = inverse_mod(mod_floor(f.multiplier, M), M);
  const std::int64_t n0 =
      static_cast<std::int64_t>(static_cast<__int128>(mod_floor(f.residue, M)) * inv % M);
  std::int64_t n = n0;
  if (n < f.first_index) n += ceil_div(f.first_index - n, M) * M;
  std::vector<std::int64_t> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i, n += M) out.push_back(n);
  return out;
}

std::int64_t family_required_index(const CongruenceFamily& f, unsigned alpha_max, std::size_t samples) {
  if (samples == 0) return 0;
  std::int64_t need = 0;
  for (unsigned a = 1; a <= alpha_max; ++a) need = std::max(need, family_indices(f, a, samples).back());
  return need;
}

void CoefficientCache::ensure(const std::string& source, std::int64_t index) {
  std::lock_guard lock(mu_);
  auto it = series_.find(source);
  if (it != series_.end() && it->second.trunc() > index) return;
  series_[source] = expand_named(source, index + 1);
}

Int CoefficientCache::coefficient(const std::string& source, std::int64_t n) const {
  std::lock_guard lock(mu_);
  const auto it = series_.find(source);
  if (it == series_.end()) throw TruncationError("series '" + source + "' not cached");
  Int c = it->second.at(n);
  if (const auto f = faults_.find(source); f != faults_.end()) {
    if (const auto g = f->second.find(n); g != f->second.end()) c += g->second;
  }
  return c;
}

void CoefficientCache::corrupt(const std::string& source, std::int64_t n, const Int& delta) {
  std::lock_guard lock(mu_);
  faults_[source][n] += delta;
}

bool FamilyReport::passed() const {
  if (partial) return false;
  for (const auto& r : records) {
    if (!r.passed) return false;
  }
  return true;
}

namespace {

struct Cell {
  std::size_t family;
  unsigned alpha;
  std::vector<std::int64_t> indices;
};

AlphaRecord run_cell(const CongruenceFamily& f, const Cell& cell, const CoefficientCache& cache) {
  AlphaRecord rec;
  rec.alpha = cell.alpha;
  rec.prime = f.prime;
  rec.exponent = f.exponent(cell.alpha);
  rec.modulus = ipow(f.prime, static_cast<unsigned long>(rec.exponent));
  rec.passed = true;
  for (std::int64_t n : cell.indices) {
    const Int c = cache.coefficient(f.source, n);
    ++rec.checked;
    if (auto v = valuation(c, f.prime)) {
      if (!rec.min_valuation || *v < *rec.min_valuation) rec.min_valuation = v;
    }
    if (!mpz_divisible_p(c.get_mpz_t(), rec.modulus.get_mpz_t()) && !rec.witness) {
      rec.witness = n;
      rec.passed = false;
    }
  }
  return rec;
}

unsigned effective_alpha_max(const CongruenceFamily& f, const VerifyOptions& opt) {
  return opt.alpha_max != 0 ? opt.alpha_max : f.default_alpha_max;
}

}  // namespace

std::vector<FamilyReport> verify_families(const std::vector<CongruenceFamily>& fs, const VerifyOptions& opt,
                                          CoefficientCache& cache) {
  std::vector<FamilyReport> reports(fs.size());
  std::vector<Cell> cells;
  std::vector<std::vector<std::optional<AlphaRecord>>> slots(fs.size());
  std::map<std::string, std::int64_t> need_by_source;

  for (std::size_t i = 0; i < fs.size(); ++i) {
    const auto& f = fs[i];
    reports[i].family = f.name;
    const unsigned amax = effective_alpha_max(f, opt);
    slots[i].resize(amax);
    for (unsigned a = 1; a <= amax; ++a) {
      auto idx = family_indices(f, a, opt.samples);
      const std::int64_t need = idx.empty() ? 0 : idx.back();
      if (need > opt.budget) {
        AlphaRecord skipped;
        skipped.alpha = a;
        skipped.prime = f.prime;
        skipped.exponent = f.exponent(a);
        skipped.modulus = ipow(f.prime, static_cast<unsigned long>(skipped.exponent));
        skipped.skipped = true;
        slots[i][a - 1] = skipped;
        reports[i].partial = true;
        continue;
      }
      need_by_source[f.source] = std::max(need_by_source[f.source], need);
      cells.push_back({i, a, std::move(idx)});
    }
  }
  for (const auto& [source, need] : need_by_source) cache.ensure(source, need);

  const unsigned workers = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(cells.size())));
  std::atomic<std::size_t> next{0};
  std::vector<AlphaRecord> done(cells.size());
  auto work = [&] {
    for (std::size_t k = next++; k < cells.size(); k = next++) done[k] = run_cell(fs[cells[k].family], cells[k], cache);
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (std::size_t k = 0; k < cells.size(); ++k) slots[cells[k].family][cells[k].alpha - 1] = std::move(done[k]);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (auto& s : slots[i]) reports[i].records.push_back(std::move(*s));
  }
  return reports;
}

FamilyReport verify_family(const CongruenceFamily& f, const VerifyOptions& opt, CoefficientCache& cache) {
  return verify_families({f}, opt, cache).front();
}

FamilyReport verify_family(const CongruenceFamily& f, const VerifyOptions& opt) {
  CoefficientCache cache;
  return verify_family(f, opt, cache);
}

bool recheck_divisible(const CongruenceFamily& f, unsigned alpha, std::int64_t n) {
  const Int c = expand_named(f.source, n + 1).at(n);
  const Int modulus = ipow(f.prime, static_cast<unsigned long>(f.exponent(alpha)));
  return mpz_divisible_p(c.get_mpz_t(), modulus.get_mpz_t()) != 0;
}

}  // namespace qcong
