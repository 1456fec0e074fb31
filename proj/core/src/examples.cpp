#include "brim/examples.hpp"

namespace brim {

nlohmann::json to_json(const ExampleBundle& b) {
  nlohmann::json checks = nlohmann::json::array();
  std::size_t failed = 0;
  for (const auto& c : b.checks) {
    failed += !c.passed;
    checks.push_back({{"section", c.section}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return {{"checks", std::move(checks)}, {"total", b.checks.size()}, {"failed", failed}};
}

}  // namespace brim
