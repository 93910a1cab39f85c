#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rifle/core.hpp"
#include "rifle/oracle.hpp"

namespace rifle {

// Total payoff to the coalition (p_mask, q_mask) under m, determined by the
// matching alone when every matched pair crossing the coalition boundary is
// rigid; nullopt otherwise.
std::optional<Value> forced_payoff(const Instance& inst, const Matching& m,
                                   std::uint64_t p_mask, std::uint64_t q_mask);

struct DegeneracyWitness {
  Matching mu1, mu2;
  std::uint64_t p_mask = 0, q_mask = 0;
  Value forced_value = 0;
};

struct NonDegeneracyResult {
  bool non_degenerate = true;
  std::optional<DegeneracyWitness> witness;
};

// Direct subset search over all matching pairs: for every inclusion-minimal
// coalition forced under both matchings, equal forced payoffs must imply the
// matchings coincide on it.  Guarded at n <= 5.  The parallel variant splits
// the matching-pair loop across OpenMP threads and reports the same witness
// as the serial reference (lowest pair index first).
NonDegeneracyResult is_non_degenerate(const Instance& inst);
NonDegeneracyResult is_non_degenerate_serial(const Instance& inst);

enum class EdgeDir { Undirected, ToQ, ToP };

struct DigraphEdge {
  int p = 0, q = 0;
  int source = 0;  // 0: edge of the first outcome, 1: of the second
  EdgeDir dir = EdgeDir::Undirected;
};

struct DigraphComponent {
  std::vector<int> p_vertices, q_vertices;
  std::vector<int> edges;  // indices into ComparisonDigraph::edges
  bool cycle = false;
};

// Union of the two matchings with edges directed toward the side that
// strictly prefers them.  For stable inputs no edge is ever bidirected.
struct ComparisonDigraph {
  std::vector<DigraphEdge> edges;
  std::vector<DigraphComponent> components;
  // Diagnostics; all hold in non-degenerate games.
  bool uniform_orientation = true;        // one direction per component
  bool indifferent_only_component = false;  // beyond undirected two-cycles
  bool flexible_prefers_indifferent = false;
};

ComparisonDigraph comparison_digraph(const Instance& inst, const Outcome& o1,
                                     const Outcome& o2);

// Least upper bound under the P-preference order: payoffs max(u)/min(v) with
// the per-component P-preferred matching.  The assembled outcome is verified
// before being returned; nullopt means no compatible matching exists, which
// only happens in degenerate games.
std::optional<Outcome> join(const Instance& inst, const Outcome& o1,
                            const Outcome& o2);

// Greatest lower bound; dual of join.
std::optional<Outcome> meet(const Instance& inst, const Outcome& o1,
                            const Outcome& o2);

struct MatchingSearch {
  enum class Status { None, Unique, Multiple };
  Status status = Status::None;
  std::optional<Matching> matching;
  int count = 0;
};

// All matchings making (u, v) a stable outcome; in a non-degenerate game a
// stable payoff determines its matching.  Guarded at n <= 6.
MatchingSearch matching_from_payoff(const Instance& inst,
                                    const std::vector<Value>& u,
                                    const std::vector<Value>& v);

}  // namespace rifle
