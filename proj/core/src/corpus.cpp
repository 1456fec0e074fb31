#include "brim/corpus.hpp"

namespace brim {

std::string to_string(CorpusKind k) {
  switch (k) {
    case CorpusKind::RandomMonomial:
      return "random_monomial";
    case CorpusKind::DirectSum:
      return "direct_sum";
    case CorpusKind::Mabc:
      return "mabc";
    case CorpusKind::Dense:
      return "dense";
  }
  return "unknown";
}

CorpusSummary summarize(std::vector<CorpusEntry> entries) {
  CorpusSummary s;
  for (const auto& e : entries) {
    if (!e.error.empty()) ++s.error_count;
    s.violation_count += e.violations.size();
    if (!e.report) continue;
    auto j = to_json(*e.report)["verdicts"];
    for (const auto& [name, value] : j.items()) {
      auto& t = s.tally[name];
      if (value.is_null())
        ++t.skipped;
      else if (value.get<bool>())
        ++t.held;
      else
        ++t.failed;
    }
  }
  s.entries = std::move(entries);
  return s;
}

nlohmann::json to_json(const CorpusSummary& s) {
  nlohmann::json j;
  j["items"] = s.entries.size();
  j["violations"] = s.violation_count;
  j["errors"] = s.error_count;
  nlohmann::json tally;
  for (const auto& [name, t] : s.tally) tally[name] = {{"held", t.held}, {"failed", t.failed}, {"skipped", t.skipped}};
  j["tally"] = std::move(tally);
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& e : s.entries) {
    if (e.error.empty() && e.violations.empty()) continue;
    nlohmann::json f{{"label", e.label}, {"kind", to_string(e.kind)}};
    if (!e.error.empty()) f["error"] = e.error;
    if (!e.violations.empty()) f["violations"] = e.violations;
    if (e.report) f["report"] = to_json(*e.report);
    failures.push_back(std::move(f));
  }
  j["failures"] = std::move(failures);
  return j;
}

}  // namespace brim
