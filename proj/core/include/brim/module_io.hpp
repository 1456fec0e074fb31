#pragma once

#include <string>
#include <string_view>

#include "brim/errors.hpp"
#include "brim/module.hpp"
#include "json.hpp"

namespace brim {

// {"rank": 2, "generators": [["y^2","x^2"], ...]}, one array per column.
template <Field K>
Module<K> module_from_json(const nlohmann::json& j, const Options& opts = {}, std::uint64_t seed = 1) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("generators"))
    throw InputError("module JSON needs \"rank\" and \"generators\"");
  if (!j["rank"].is_number_unsigned()) throw InputError("\"rank\" must be a positive integer");
  const auto r = j["rank"].get<std::size_t>();
  if (!j["generators"].is_array()) throw InputError("\"generators\" must be an array of columns");
  std::vector<PolyVector<K>> cols;
  for (const auto& col : j["generators"]) {
    if (!col.is_array()) throw InputError("each generator must be an array of polynomial strings");
    PolyVector<K> v;
    for (const auto& e : col) {
      if (!e.is_string()) throw InputError("polynomial entries must be strings");
      v.push_back(parse_poly<K>(e.get<std::string>()));
    }
    cols.push_back(std::move(v));
  }
  return module_new(r, std::move(cols), opts, seed);
}

template <Field K>
Module<K> parse_module(std::string_view text, const Options& opts = {}, std::uint64_t seed = 1) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("module JSON: ") + e.what(), e.byte);
  }
  return module_from_json<K>(j, opts, seed);
}

template <Field K>
nlohmann::json module_to_json(const Module<K>& M) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& c : M.columns()) {
    nlohmann::json col = nlohmann::json::array();
    for (const auto& p : c) col.push_back(p.to_string());
    gens.push_back(std::move(col));
  }
  return {{"rank", M.rank()}, {"generators", std::move(gens)}};
}

}  // namespace brim
