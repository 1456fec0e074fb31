#pragma once

#include <cstdint>

namespace brim {

enum class Engine {
  // Staircase arithmetic for monomial input, truncated linear algebra otherwise.
  Auto,
  Truncation,
};

struct Options {
  std::uint32_t trunc_cap = 64;
  Engine engine = Engine::Auto;
  // Samples for the generic-pair route of e(I); the minimum is taken.
  int hs_samples = 3;
  // Also run the second-difference route of e(I) and require agreement.
  bool cross_check = false;
  // Largest p (and q) used by the mixed multiplicity difference table.
  std::uint32_t pq_cap = 6;
  std::uint32_t presentation_margin = 4;
  std::uint32_t presentation_cap = 160;
  std::uint32_t sym_trunc_cap = 160;
  // Random elements tried by closure probing besides monomial elements.
  int closure_probes = 2;
};

}  // namespace brim
