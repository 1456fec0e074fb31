#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "brim/errors.hpp"
#include "brim/linalg.hpp"
#include "brim/trunc.hpp"

namespace brim {

struct ColengthResult {
  // Empty when the cap was reached without certification.
  std::optional<std::uint64_t> value;
  // Truncation degree at which the stopping rule fired.
  std::uint32_t certified_at = 0;
  // Least k with m^k F contained in the module.
  std::uint32_t saturation = 0;

  bool finite() const noexcept { return value.has_value(); }
  std::uint64_t get() const {
    if (!value) throw ResourceError("colength exceeds the truncation cap");
    return *value;
  }
};

// Degrees tried by the certified span before giving up at `cap`.
inline std::vector<std::uint32_t> truncation_schedule(std::uint32_t start, std::uint32_t cap) {
  std::vector<std::uint32_t> out;
  std::uint32_t n = std::max<std::uint32_t>(start, 2);
  while (n < cap) {
    out.push_back(n);
    n = n < 8 ? 8 : n + n / 2;
  }
  out.push_back(cap);
  return out;
}

// Image of a submodule M of F = R^rank in F_N, grown until m^k F lies in the
// image modulo m^(k+1) F for some k < N; by Nakayama m^k F is then inside M
// and everything below degree k is exact.
template <Field K>
class ModuleSpan {
 public:
  static ModuleSpan build(const std::vector<PolyVector<K>>& gens, std::size_t rank, std::uint32_t cap,
                          std::uint32_t start = 8) {
    for (const auto& g : gens)
      if (g.size() != rank) throw InputError("generator has the wrong number of components");
    int min_order = kInfiniteOrder;
    for (const auto& g : gens) min_order = std::min(min_order, order(g));
    if (min_order != kInfiniteOrder) start = std::max<std::uint32_t>(start, static_cast<std::uint32_t>(min_order) + 2);
    start = std::min(start, cap);
    std::optional<ModuleSpan> last;
    for (auto n : truncation_schedule(start, cap)) {
      last.emplace(ModuleSpan(gens, rank, n));
      if (last->certified()) break;
    }
    return std::move(*last);
  }

  std::size_t rank() const noexcept { return rank_; }
  std::uint32_t truncation() const noexcept { return n_; }
  bool certified() const noexcept { return saturation_.has_value(); }

  ColengthResult result() const {
    ColengthResult r;
    r.certified_at = n_;
    if (saturation_) {
      r.value = colength_;
      r.saturation = *saturation_;
    }
    return r;
  }
  std::uint64_t colength() const { return result().get(); }
  std::uint32_t saturation() const {
    require_certified();
    return *saturation_;
  }

  bool contains(const PolyVector<K>& v) const {
    require_certified();
    if (v.size() != rank_) throw InputError("vector has the wrong number of components");
    return echelon_.contains(embed(v, {0, 0}, n_));
  }

  const SparseEchelon<K>& echelon() const noexcept { return echelon_; }

 private:
  ModuleSpan(const std::vector<PolyVector<K>>& gens, std::size_t rank, std::uint32_t n)
      : rank_(rank), n_(n), echelon_(static_cast<std::size_t>(monomials_below(n)) * rank) {
    for (std::uint32_t d = 0; d < n; ++d) {
      for (const auto& g : gens) {
        int o = order(g);
        if (o == kInfiniteOrder || d + static_cast<std::uint32_t>(o) >= n) continue;
        for (std::uint32_t b = 0; b <= d; ++b) echelon_.insert(embed(g, {d - b, b}, n));
      }
    }
    std::vector<std::uint64_t> per_degree(n, 0);
    for (auto p : echelon_.pivots()) ++per_degree[exponent_at(p / rank).degree()];
    std::uint64_t missing = 0;
    for (std::uint32_t d = 0; d < n; ++d) {
      std::uint64_t full = static_cast<std::uint64_t>(rank) * (d + 1);
      if (per_degree[d] == full) {
        saturation_ = d;
        colength_ = missing;
        break;
      }
      missing += full - per_degree[d];
    }
  }

  void require_certified() const {
    if (!saturation_) throw ResourceError("colength exceeds the truncation cap");
  }

  std::size_t rank_;
  std::uint32_t n_;
  SparseEchelon<K> echelon_;
  std::optional<std::uint32_t> saturation_;
  std::uint64_t colength_ = 0;
};

template <Field K>
ColengthResult span_colength(const std::vector<PolyVector<K>>& gens, std::size_t rank, std::uint32_t cap) {
  return ModuleSpan<K>::build(gens, rank, cap).result();
}

}  // namespace brim
