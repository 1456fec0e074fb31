#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "brim/report.hpp"

namespace brim {

enum class CorpusKind { RandomMonomial, DirectSum, Mabc, Dense };

std::string to_string(CorpusKind k);

template <Field K>
struct CorpusItem {
  std::string label;
  CorpusKind kind = CorpusKind::RandomMonomial;
  Module<K> module;
};

struct CorpusConfig {
  std::size_t random_count = 100;
  std::size_t direct_sum_count = 25;
  bool include_grid = true;
  // Dense random-coefficient modules; only adjoint-free verdicts apply to them.
  std::size_t dense_count = 0;
  std::size_t min_rank = 1;
  std::size_t max_rank = 3;
  std::uint64_t colength_bound = 25;
  std::uint64_t component_bound = 10;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  ReportOptions report;
};

inline std::uint64_t item_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + tag * 0xBF58476D1CE4E5B9ULL + index;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Bigraded generator matrix: row i has shift s_i, column j degree d_j, and the
// entry is c * x^(d_j - s_i) with c possibly zero. All minors are then monomials
// up to a scalar, so I(M) is monomial.
template <Field K>
Module<K> random_bigraded_module(std::size_t r, std::uint64_t bound, std::uint64_t seed, const Options& opts = {}) {
  Rng rng(seed);
  auto pick = [&](std::uint32_t lo, std::uint32_t hi) {
    return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
  };
  for (int attempt = 0; attempt < 500; ++attempt) {
    std::vector<Exponent> shift(r);
    for (auto& s : shift) s = {pick(0, 2), pick(0, 2)};
    std::vector<PolyVector<K>> cols;
    auto column = [&](Exponent d, std::optional<std::size_t> only) {
      PolyVector<K> v(r);
      for (std::size_t i = 0; i < r; ++i) {
        if (only && *only != i) continue;
        if (d.a < shift[i].a || d.b < shift[i].b) continue;
        Exponent e{d.a - shift[i].a, d.b - shift[i].b};
        if (e.a + e.b == 0) continue;
        if (!only && pick(0, 3) == 0) continue;
        v[i] = Poly<K>::monomial(e, random_unit<K>(rng));
      }
      if (!is_zero(v)) cols.push_back(std::move(v));
    };
    for (std::size_t i = 0; i < r; ++i) {
      if (pick(0, 9) < 8) column({shift[i].a + pick(1, 4), shift[i].b}, i);
      if (pick(0, 9) < 8) column({shift[i].a, shift[i].b + pick(1, 4)}, i);
    }
    const std::uint32_t mixing = pick(1, static_cast<std::uint32_t>(r) + 1);
    for (std::uint32_t k = 0; k < mixing; ++k) column({pick(1, 5), pick(1, 5)}, std::nullopt);
    if (cols.size() < r) continue;
    try {
      Module<K> M(r, std::move(cols));
      if (!M.in_maximal_ideal() || !has_generic_rank(M, seed)) continue;
      auto I = ideal_of_minors(M);
      auto s = I.staircase();
      if (!s || !s->is_m_primary()) continue;
      auto len = colength_FM(M, opts);
      if (!len.finite() || *len.value > bound || *len.value == 0) continue;
      return minimal_generators(M, opts);
    } catch (const InputError&) {
      continue;
    }
  }
  throw ResourceError("no bigraded module within the colength bound after 500 attempts");
}

// Direct sum of integrally closed monomial ideals with the given orders.
template <Field K>
Module<K> random_ic_direct_sum(const std::vector<std::uint32_t>& orders, std::uint64_t bound, std::uint64_t seed) {
  std::vector<Staircase> parts;
  for (std::size_t i = 0; i < orders.size(); ++i) parts.push_back(random_ic_ideal(orders[i], bound, item_seed(seed, 7, i)));
  return direct_sum<K>(parts);
}

// A bigraded module with random higher-order terms added to every entry.
template <Field K>
Module<K> random_dense_module(std::size_t r, std::uint64_t bound, std::uint64_t seed, const Options& opts = {}) {
  Rng rng(seed ^ 0xD3A5EULL);
  for (int attempt = 0; attempt < 100; ++attempt) {
    auto base = random_bigraded_module<K>(r, bound, item_seed(seed, 11, attempt), opts);
    std::vector<PolyVector<K>> cols;
    for (auto c : base.columns()) {
      for (auto& p : c) {
        if (p.is_zero()) continue;
        const auto d = static_cast<std::uint32_t>(p.order()) + 1;
        const auto b = std::uniform_int_distribution<std::uint32_t>(0, d)(rng);
        p += Poly<K>::monomial(Exponent{d - b, b}, random_unit<K>(rng));
      }
      cols.push_back(std::move(c));
    }
    Module<K> M(r, std::move(cols));
    auto len = colength_FM(M, opts);
    if (!len.finite() || *len.value > bound) continue;
    if (ideal_of_minors(M).staircase()) continue;
    return M;
  }
  throw ResourceError("no dense module within the colength bound");
}

template <Field K>
std::vector<CorpusItem<K>> mabc_grid(int max_sum = 8) {
  std::vector<CorpusItem<K>> out;
  for (int a = 1; a <= max_sum; ++a)
    for (int c = a; c <= max_sum; ++c)
      for (int b = c + 1; b <= a + c && a + b <= max_sum; ++b)
        out.push_back({"M(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")",
                       CorpusKind::Mabc, family_Mabc<K>(a, b, c)});
  return out;
}

template <Field K>
std::vector<CorpusItem<K>> make_corpus(const CorpusConfig& cfg, const Options& opts = {}) {
  std::vector<CorpusItem<K>> out;
  const std::size_t span = cfg.max_rank - cfg.min_rank + 1;
  for (std::size_t i = 0; i < cfg.random_count; ++i) {
    const std::size_t r = cfg.min_rank + i % span;
    out.push_back({"random#" + std::to_string(i), CorpusKind::RandomMonomial,
                   random_bigraded_module<K>(r, cfg.colength_bound, item_seed(cfg.seed, 1, i), opts)});
  }
  for (std::size_t i = 0; i < cfg.direct_sum_count; ++i) {
    const std::size_t r = cfg.min_rank + i % span;
    Rng rng(item_seed(cfg.seed, 2, i));
    std::vector<std::uint32_t> orders(r);
    for (auto& o : orders) o = std::uniform_int_distribution<std::uint32_t>(1, 3)(rng);
    out.push_back({"direct_sum#" + std::to_string(i), CorpusKind::DirectSum,
                   random_ic_direct_sum<K>(orders, cfg.component_bound, item_seed(cfg.seed, 3, i))});
  }
  if (cfg.include_grid)
    for (auto& item : mabc_grid<K>()) out.push_back(std::move(item));
  for (std::size_t i = 0; i < cfg.dense_count; ++i) {
    const std::size_t r = cfg.min_rank + i % std::min<std::size_t>(span, 2);
    out.push_back({"dense#" + std::to_string(i), CorpusKind::Dense,
                   random_dense_module<K>(r, cfg.colength_bound, item_seed(cfg.seed, 4, i), opts)});
  }
  return out;
}

// Runs fn(i) for i < count on a pool of workers; results land at their index.
template <class T>
std::vector<T> parallel_map(std::size_t count, unsigned threads, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(count);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) out[i] = fn(i);
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  return out;
}

struct CorpusEntry {
  std::string label;
  CorpusKind kind = CorpusKind::RandomMonomial;
  std::optional<InvariantReport> report;
  std::string error;
  std::vector<std::string> violations;
};

struct VerdictTally {
  std::size_t held = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};

struct CorpusSummary {
  std::vector<CorpusEntry> entries;
  std::map<std::string, VerdictTally> tally;
  std::size_t violation_count = 0;
  std::size_t error_count = 0;

  bool ok() const noexcept { return violation_count == 0; }
};

CorpusSummary summarize(std::vector<CorpusEntry> entries);
nlohmann::json to_json(const CorpusSummary& s);

template <Field K>
CorpusSummary verify_items(const std::vector<CorpusItem<K>>& items, const CorpusConfig& cfg, const Options& opts = {}) {
  auto entries = parallel_map<CorpusEntry>(items.size(), cfg.threads, [&](std::size_t i) {
    CorpusEntry e;
    e.label = items[i].label;
    e.kind = items[i].kind;
    try {
      e.report = report(items[i].module, item_seed(cfg.seed, 5, i), opts, cfg.report);
      e.violations = violations(e.report->verdicts);
    } catch (const std::exception& ex) {
      e.error = ex.what();
    }
    return e;
  });
  return summarize(std::move(entries));
}

template <Field K>
CorpusSummary verify_corpus(const CorpusConfig& cfg, const Options& opts = {}) {
  return verify_items(make_corpus<K>(cfg, opts), cfg, opts);
}

}  // namespace brim
