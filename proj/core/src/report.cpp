#include "brim/report.hpp"

#include <sstream>

namespace brim {

std::string to_string(AdjTier t) {
  switch (t) {
    case AdjTier::Polyhedral:
      return "polyhedral";
    case AdjTier::Presentation:
      return "presentation";
    case AdjTier::Unavailable:
      return "unavailable";
  }
  return "unavailable";
}

AdjTier adj_tier_from_string(const std::string& s) {
  if (s == "polyhedral") return AdjTier::Polyhedral;
  if (s == "presentation") return AdjTier::Presentation;
  if (s == "unavailable") return AdjTier::Unavailable;
  throw InputError("unknown adjoint tier '" + s + "'");
}

ClosureStatus closure_status_from_string(const std::string& s) {
  if (s == "certified") return ClosureStatus::Certified;
  if (s == "witness_not_closed") return ClosureStatus::WitnessNotClosed;
  if (s == "unknown") return ClosureStatus::Unknown;
  throw InputError("unknown closure status '" + s + "'");
}

namespace {

using I64 = std::int64_t;

std::optional<I64> get(const std::optional<std::uint64_t>& v) {
  if (!v) return std::nullopt;
  return static_cast<I64>(*v);
}

template <class F>
std::optional<bool> when(F f, std::initializer_list<bool> have) {
  for (bool h : have)
    if (!h) return std::nullopt;
  return f();
}

}  // namespace

Verdicts derive_verdicts(const InvariantReport& r) {
  Verdicts v;
  auto eM = get(r.e_M), eI = get(r.e_I), lF = get(r.len_F_M), lI = get(r.len_R_I), adj = get(r.len_R_adj);
  auto fitt = get(r.len_R_fitt_r1), irm1 = get(r.len_R_I_r_minus_1), mu = get(r.mu), ord = get(r.ord_I);

  v.lower_bound = when([&] { return *eI - *adj <= *eM; }, {eI.has_value(), adj.has_value(), eM.has_value()});
  v.upper_bound = when([&] { return *eM <= *lF + *adj; }, {eM.has_value(), lF.has_value(), adj.has_value()});
  v.upper_equality = when([&] { return *eM == *lF + *adj; }, {eM.has_value(), lF.has_value(), adj.has_value()});
  if (v.upper_equality && r.ic_status != ClosureStatus::Unknown)
    v.upper_equality_consistent = *v.upper_equality == (r.ic_status == ClosureStatus::Certified);
  v.lower_equality = when([&] { return *eM == *eI - *adj; }, {eM.has_value(), eI.has_value(), adj.has_value()});
  if (v.lower_equality && r.I_closed && lI && eM) v.lower_equality_consistent = *v.lower_equality == (*r.I_closed && *lI == *eM);
  v.fitting_bound = when([&] { return *eM - *lF >= *fitt; }, {eM.has_value(), lF.has_value(), fitt.has_value()});
  v.minors_bound = when([&] { return *eI - *eM >= *irm1; }, {eI.has_value(), eM.has_value(), irm1.has_value()});
  v.gap_inequality =
      when([&] { return *eI - *eM >= *lI - *lF; }, {eI.has_value(), eM.has_value(), lI.has_value(), lF.has_value()});
  if (r.ic_status == ClosureStatus::Certified && eI && eM && lI && lF)
    v.gap_identity_consistent = *eI - *eM == *lI - *lF;
  v.gap_adjoint_bound = when([&] { return *eI - *eM <= *adj; }, {eI.has_value(), eM.has_value(), adj.has_value()});
  v.mu_bound = when([&] { return *mu <= *ord + static_cast<I64>(r.rank); }, {mu.has_value(), ord.has_value()});
  if (r.ic_status == ClosureStatus::Certified && r.contracted) v.contracted_consistent = *r.contracted;
  if (r.e_M && r.e_M_limit) v.routes_agree = *r.e_M == *r.e_M_limit;
  return v;
}

std::vector<std::string> violations(const Verdicts& v) {
  std::vector<std::string> out;
  auto check = [&](const char* name, const std::optional<bool>& b) {
    if (b && !*b) out.emplace_back(name);
  };
  check("lower_bound", v.lower_bound);
  check("upper_bound", v.upper_bound);
  check("upper_equality_consistent", v.upper_equality_consistent);
  check("lower_equality_consistent", v.lower_equality_consistent);
  check("fitting_bound", v.fitting_bound);
  check("minors_bound", v.minors_bound);
  check("gap_inequality", v.gap_inequality);
  check("gap_identity_consistent", v.gap_identity_consistent);
  check("gap_adjoint_bound", v.gap_adjoint_bound);
  check("mu_bound", v.mu_bound);
  check("contracted_consistent", v.contracted_consistent);
  check("routes_agree", v.routes_agree);
  return out;
}

namespace {

template <class T>
nlohmann::json opt(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <class T>
std::optional<T> read_opt(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("report JSON lacks \"") + key + "\"");
  if (j[key].is_null()) return std::nullopt;
  return j[key].get<T>();
}

#define BRIM_VERDICTS(X)                                                                                           \
  X(lower_bound) X(upper_bound) X(upper_equality) X(upper_equality_consistent) X(lower_equality) X(lower_equality_consistent) X(fitting_bound) X(minors_bound) \
  X(gap_inequality) X(gap_identity_consistent) X(gap_adjoint_bound) X(mu_bound) X(contracted_consistent) X(routes_agree)

#define BRIM_COUNTS(X) \
  X(mu) X(ord_I) X(len_F_M) X(len_R_I) X(e_M) X(e_M_limit) X(e_I) X(len_R_adj) X(len_R_fitt_r1) X(len_R_I_r_minus_1)

}  // namespace

nlohmann::json to_json(const InvariantReport& r) {
  nlohmann::json j;
  j["rank"] = r.rank;
  j["n"] = r.n;
  j["free_rank"] = r.free_rank;
#define X(f) j[#f] = opt(r.f);
  BRIM_COUNTS(X)
#undef X
  j["adj_tier"] = to_string(r.adj_tier);
  j["I_closed"] = opt(r.I_closed);
  j["ic_status"] = to_string(r.ic_status);
  j["contracted"] = opt(r.contracted);
  j["errors"] = r.errors;
  nlohmann::json v;
#define X(f) v[#f] = opt(r.verdicts.f);
  BRIM_VERDICTS(X)
#undef X
  j["verdicts"] = std::move(v);
  return j;
}

InvariantReport report_from_json(const nlohmann::json& j) {
  InvariantReport r;
  try {
    r.rank = j.at("rank").get<std::size_t>();
    r.n = j.at("n").get<std::size_t>();
    r.free_rank = j.at("free_rank").get<std::size_t>();
#define X(f) r.f = read_opt<std::uint64_t>(j, #f);
    BRIM_COUNTS(X)
#undef X
    r.adj_tier = adj_tier_from_string(j.at("adj_tier").get<std::string>());
    r.I_closed = read_opt<bool>(j, "I_closed");
    r.ic_status = closure_status_from_string(j.at("ic_status").get<std::string>());
    r.contracted = read_opt<bool>(j, "contracted");
    r.errors = j.at("errors").get<std::map<std::string, std::string>>();
    const auto& v = j.at("verdicts");
#define X(f) r.verdicts.f = read_opt<bool>(v, #f);
    BRIM_VERDICTS(X)
#undef X
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report JSON: ") + e.what());
  }
  return r;
}

std::string to_text(const InvariantReport& r) {
  std::ostringstream out;
  auto num = [&](const char* k, const std::optional<std::uint64_t>& v) {
    out << k << ": " << (v ? std::to_string(*v) : "n/a") << "\n";
  };
  auto flag = [&](const char* k, const std::optional<bool>& v) {
    out << "  " << k << ": " << (v ? (*v ? "true" : "false") : "n/a") << "\n";
  };
  out << "rank: " << r.rank << "\nn: " << r.n << "\nfree_rank: " << r.free_rank << "\n";
#define X(f) num(#f, r.f);
  BRIM_COUNTS(X)
#undef X
  out << "adj_tier: " << to_string(r.adj_tier) << "\n";
  out << "I_closed: " << (r.I_closed ? (*r.I_closed ? "true" : "false") : "n/a") << "\n";
  out << "ic_status: " << to_string(r.ic_status) << "\n";
  out << "contracted: " << (r.contracted ? (*r.contracted ? "true" : "false") : "n/a") << "\n";
  out << "verdicts:\n";
#define X(f) flag(#f, r.verdicts.f);
  BRIM_VERDICTS(X)
#undef X
  for (const auto& [k, e] : r.errors) out << "error[" << k << "]: " << e << "\n";
  return out.str();
}

}  // namespace brim
