#pragma once

#include <cstdint>

#include "rifle/core.hpp"

namespace rifle {

struct GenParams {
  int n = 1;
  Value max_value = 0;
  double rigid_prob = 0.0;
  std::uint64_t seed = 0;
};

// Deterministic pseudo-random instance; identical parameters give identical
// instances on every platform.  Draw order: rigid P flags, rigid Q flags,
// then (beta, gamma) row by row.
Instance generate_instance(const GenParams& params);

}  // namespace rifle
