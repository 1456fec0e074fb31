#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "brim/structure.hpp"
#include "json.hpp"

namespace brim {

enum class AdjTier { Polyhedral, Presentation, Unavailable };

std::string to_string(AdjTier t);
AdjTier adj_tier_from_string(const std::string& s);
ClosureStatus closure_status_from_string(const std::string& s);

// Each verdict is empty when a field it needs could not be computed.
struct Verdicts {
  std::optional<bool> lower_bound;
  std::optional<bool> upper_bound;
  std::optional<bool> upper_equality;
  std::optional<bool> upper_equality_consistent;
  std::optional<bool> lower_equality;
  std::optional<bool> lower_equality_consistent;
  std::optional<bool> fitting_bound;
  std::optional<bool> minors_bound;
  std::optional<bool> gap_inequality;
  std::optional<bool> gap_identity_consistent;
  std::optional<bool> gap_adjoint_bound;
  std::optional<bool> mu_bound;
  std::optional<bool> contracted_consistent;
  std::optional<bool> routes_agree;

  friend bool operator==(const Verdicts&, const Verdicts&) = default;
};

struct InvariantReport {
  std::size_t rank = 0;
  std::size_t n = 0;
  std::size_t free_rank = 0;
  std::optional<std::uint64_t> mu;
  std::optional<std::uint64_t> ord_I;
  std::optional<std::uint64_t> len_F_M;
  std::optional<std::uint64_t> len_R_I;
  std::optional<std::uint64_t> e_M;
  std::optional<std::uint64_t> e_M_limit;
  std::optional<std::uint64_t> e_I;
  std::optional<std::uint64_t> len_R_adj;
  AdjTier adj_tier = AdjTier::Unavailable;
  std::optional<std::uint64_t> len_R_fitt_r1;
  std::optional<std::uint64_t> len_R_I_r_minus_1;
  std::optional<bool> I_closed;
  ClosureStatus ic_status = ClosureStatus::Unknown;
  std::optional<bool> contracted;
  // Field name to the reason it is missing.
  std::map<std::string, std::string> errors;
  Verdicts verdicts;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

Verdicts derive_verdicts(const InvariantReport& r);
// Verdicts that are statements of the theory (not observations like upper_equality) and came out false.
std::vector<std::string> violations(const Verdicts& v);

nlohmann::json to_json(const InvariantReport& r);
InvariantReport report_from_json(const nlohmann::json& j);
std::string to_text(const InvariantReport& r);

struct ReportOptions {
  // Also compute e(M) through the symmetric-power limit.
  bool with_limit = false;
  std::uint32_t limit_pmax = 0;
};

namespace detail {

template <class T>
void capture(InvariantReport& rep, const char* field, std::optional<T>& slot, const std::function<T()>& fn) {
  try {
    slot = fn();
  } catch (const std::exception& e) {
    rep.errors[field] = e.what();
  }
}

}  // namespace detail

template <Field K>
InvariantReport report(const Module<K>& M, std::uint64_t seed = 1, const Options& opts = {},
                       const ReportOptions& ropts = {}) {
  InvariantReport rep;
  rep.rank = M.rank();
  rep.n = M.size();
  auto split = split_free(M);
  const auto& Mp = split.reduced;
  rep.free_rank = split.free_rank;
  const std::size_t r = M.rank();
  auto I = ideal_of_minors(M);

  using U = std::uint64_t;
  detail::capture<U>(rep, "mu", rep.mu, [&] { return min_gens(M, opts); });
  detail::capture<U>(rep, "ord_I", rep.ord_I, [&] { return order(I); });
  detail::capture<U>(rep, "len_F_M", rep.len_F_M, [&] { return colength_FM(M, opts).get(); });
  detail::capture<U>(rep, "len_R_I", rep.len_R_I, [&] { return colength(I, opts).get(); });
  detail::capture<U>(rep, "e_M", rep.e_M, [&] { return br_multiplicity(M, seed, opts); });
  detail::capture<U>(rep, "e_I", rep.e_I, [&] { return hs_multiplicity(I, seed, opts); });
  if (ropts.with_limit) {
    detail::capture<U>(rep, "e_M_limit", rep.e_M_limit, [&] {
      if (Mp.rank() == 0) return U{0};
      // Smallest admissible window first; widened only when it has not stabilized.
      auto p = std::max<std::uint32_t>(ropts.limit_pmax, static_cast<std::uint32_t>(Mp.rank()) + 3);
      for (;; ++p) {
        try {
          return br_limit_multiplicity(Mp, p, opts);
        } catch (const ResourceError&) {
          if (p >= Mp.rank() + 6) throw;
        }
      }
    });
  }
  detail::capture<U>(rep, "len_R_fitt_r1", rep.len_R_fitt_r1, [&] {
    if (Mp.rank() == 0 || Mp.size() == Mp.rank()) return U{0};
    return fitt_r1(Mp, opts).colength.get();
  });
  detail::capture<U>(rep, "len_R_I_r_minus_1", rep.len_R_I_r_minus_1,
                     [&] { return colength(fitting_ideal(M, r - 1), opts).get(); });
  auto s = I.staircase();
  if (s) rep.I_closed = s->is_m_primary() && is_integrally_closed_mono(*s);
  try {
    rep.ic_status = is_integrally_closed(M, seed, opts).status;
  } catch (const std::exception& e) {
    rep.errors["ic_status"] = e.what();
  }
  detail::capture<bool>(rep, "contracted", rep.contracted, [&] {
    if (Mp.rank() == 0) return true;
    return is_contracted(Mp, opts);
  });
  if (s) {
    rep.adj_tier = AdjTier::Polyhedral;
    rep.len_R_adj = staircase_colength(polyhedral_adjoint(*s));
  } else if (rep.ic_status == ClosureStatus::Certified) {
    detail::capture<U>(rep, "len_R_adj", rep.len_R_adj, [&] {
      if (Mp.rank() == 0) return U{0};
      return adjoint_via_presentation(Mp, seed, opts).colength;
    });
    if (rep.len_R_adj) rep.adj_tier = AdjTier::Presentation;
  } else {
    rep.errors["len_R_adj"] = "adjoint unavailable: I(M) is not monomial and M is not certified integrally closed";
  }
  rep.verdicts = derive_verdicts(rep);
  return rep;
}

}  // namespace brim
