#pragma once

#include <optional>
#include <vector>

#include "rifle/core.hpp"

namespace rifle {

// All n! bijections in lexicographic order; guarded at n <= 8.
std::vector<Matching> enumerate_matchings(int n);

// Every integer stable outcome of a small instance, deduplicated and in
// canonical order (lexicographic by matching, then by u).
struct StableSet {
  Instance instance;
  std::vector<Outcome> outcomes;
};

// Brute force over all matchings and all integer splits of the flexible
// pairs (rigid pairs are forced to their prescribed shares; matched pairs
// always split alpha exactly, since stable outcomes admit no side payments).
// Guarded at n <= 6.  The parallel variant partitions the matching loop
// across OpenMP threads; results are identical to the serial reference.
StableSet stable_outcomes(const Instance& inst);
StableSet stable_outcomes_serial(const Instance& inst);

enum class PartialOrder { Greater, Less, Equal, Incomparable };

// The P-preference order: componentwise higher u and lower v.
PartialOrder compare_p(const Outcome& a, const Outcome& b);

// The unique outcome weakly dominating every member under compare_p, or
// nullopt when no single maximum exists.  Throws on an empty set.
std::optional<Outcome> p_optimal(const StableSet& set);

}  // namespace rifle
