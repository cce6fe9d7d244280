#pragma once

#include <cstddef>
#include <string_view>

namespace tgw {

// Enumeration caps. Every exhaustive search checks one of these before it
// starts.
struct Budget {
  int subset_bound = 12;                // max |T| or |M| for subset lattices
  std::size_t map_budget = 1'000'000;   // candidate maps in Hom searches
  std::size_t state_budget = 1'000'000; // carriers, congruences, tensor states
  int saturation_cap = 4;               // coordinate cap of the saturation backend

  // Parses the TGW_BUDGET syntax: either a bare integer (subset bound) or a
  // comma separated list of key=value with keys subset, maps, states, cap.
  static Budget parse(std::string_view text);
  // Defaults overridden by the TGW_BUDGET environment variable when set.
  static Budget from_environment();
};

struct Options {
  // Accept base structures or modules that fail their axioms. Results
  // computed this way carry a lenient tag.
  bool lenient = false;
  Budget budget{};
};

}  // namespace tgw
