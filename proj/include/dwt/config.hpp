#pragma once

#include <cstdint>
#include <cstdlib>

namespace dwt {

/// Engine-wide caps and knobs. Every randomized internal draws from `seed`,
/// and every enumeration respects `hom_budget`, so identical configs give
/// byte-identical results regardless of `threads`.
struct EngineConfig {
  int max_group_order = 10000;   // multiplication-table cap
  int max_char_order = 256;      // character-table (class-sum) cap
  int max_cocycle_order = 128;   // explicit G^3 phase-table cap
  std::uint64_t hom_budget = 100000000;  // tuple-relator evaluations
  int max_genus = 6;
  double tolerance = 1e-9;           // modular residual tolerance
  double verlinde_tolerance = 1e-6;  // integrality rounding tolerance
  std::uint64_t seed = 0;
  int threads = 1;

  /// Reads DWTQFT_MAX_ORDER, if set, into max_group_order.
  static EngineConfig from_env() {
    EngineConfig c;
    if (const char* s = std::getenv("DWTQFT_MAX_ORDER")) {
      int v = std::atoi(s);
      if (v > 0) c.max_group_order = v;
    }
    return c;
  }
};

}  // namespace dwt
