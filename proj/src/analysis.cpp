#include "rifle/analysis.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "rifle/errors.hpp"
#include "rifle/verify.hpp"

namespace rifle {

std::optional<Value> forced_payoff(const Instance& inst, const Matching& m,
                                   std::uint64_t p_mask, std::uint64_t q_mask) {
  if (m.n() != inst.n())
    throw std::invalid_argument("forced_payoff: matching size mismatch");
  Value total = 0;
  for (int i = 0; i < inst.n(); ++i) {
    const int j = m.q_of(i);
    const bool p_in = (p_mask >> i) & 1;
    const bool q_in = (q_mask >> j) & 1;
    if (p_in != q_in && inst.pair_class(i, j) == PairClass::Flexible)
      return std::nullopt;
    if (p_in) total += inst.beta(i, j);
    if (q_in) total += inst.gamma(i, j);
  }
  return total;
}

namespace {

constexpr int kNonDegenGuard = 5;

struct ForcedTable {
  // forced[m][c]: forced payoff of coalition c under matching m, or -1.
  // Coalition index c packs (p_mask | q_mask << n).
  std::vector<std::vector<Value>> forced;
};

ForcedTable build_forced_table(const Instance& inst,
                               const std::vector<Matching>& matchings) {
  const int n = inst.n();
  const std::uint32_t coalitions = 1u << (2 * n);
  ForcedTable table;
  table.forced.resize(matchings.size());
  for (std::size_t m = 0; m < matchings.size(); ++m) {
    auto& row = table.forced[m];
    row.assign(coalitions, -1);
    for (std::uint32_t c = 1; c < coalitions; ++c) {
      const std::uint64_t p_mask = c & ((1u << n) - 1);
      const std::uint64_t q_mask = c >> n;
      if (auto v = forced_payoff(inst, matchings[m], p_mask, q_mask)) row[c] = *v;
    }
  }
  return table;
}

bool coincide_on(const Matching& a, const Matching& b, int n, std::uint32_t c) {
  const std::uint32_t p_mask = c & ((1u << n) - 1);
  const std::uint32_t q_mask = c >> n;
  const std::vector<int> inv_a = a.p_of(), inv_b = b.p_of();
  for (int i = 0; i < n; ++i)
    if (((p_mask >> i) & 1) && a.q_of(i) != b.q_of(i)) return false;
  for (int j = 0; j < n; ++j)
    if (((q_mask >> j) & 1) && inv_a[j] != inv_b[j]) return false;
  return true;
}

// Checks one matching pair; fills the witness and returns false on a
// degeneracy.
bool check_pair(const Instance& inst, const std::vector<Matching>& matchings,
                const ForcedTable& table, std::size_t a, std::size_t b,
                DegeneracyWitness& witness) {
  const int n = inst.n();
  const std::uint32_t coalitions = 1u << (2 * n);
  std::vector<std::uint32_t> both;
  for (std::uint32_t c = 1; c < coalitions; ++c)
    if (table.forced[a][c] >= 0 && table.forced[b][c] >= 0) both.push_back(c);

  // Inclusion-minimal coalitions: keep those containing no smaller kept one.
  std::sort(both.begin(), both.end(), [](std::uint32_t x, std::uint32_t y) {
    const int px = std::popcount(x), py = std::popcount(y);
    return px != py ? px < py : x < y;
  });
  std::vector<std::uint32_t> minimal;
  for (std::uint32_t c : both) {
    bool has_subset = false;
    for (std::uint32_t m : minimal)
      if ((m & c) == m && m != c) {
        has_subset = true;
        break;
      }
    if (!has_subset) minimal.push_back(c);
  }

  for (std::uint32_t c : minimal) {
    if (table.forced[a][c] != table.forced[b][c]) continue;
    if (coincide_on(matchings[a], matchings[b], n, c)) continue;
    witness = {matchings[a], matchings[b], c & ((1u << n) - 1), c >> n,
               table.forced[a][c]};
    return false;
  }
  return true;
}

NonDegeneracyResult scan(const Instance& inst, bool parallel) {
  if (inst.n() > kNonDegenGuard)
    throw SizeGuardError("is_non_degenerate", inst.n(), kNonDegenGuard);
  const std::vector<Matching> matchings = enumerate_matchings(inst.n());
  const ForcedTable table = build_forced_table(inst, matchings);
  const std::size_t m = matchings.size();
  const std::size_t pairs = m * (m - 1) / 2;

  // Flatten (a, b) with a < b so the first failing pair is well defined and
  // the parallel scan can reduce to the lowest failing index.
  std::vector<std::pair<std::size_t, std::size_t>> index(pairs);
  {
    std::size_t k = 0;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b) index[k++] = {a, b};
  }

  std::size_t first_bad = pairs;
  DegeneracyWitness best_witness;

  if (parallel) {
#pragma omp parallel
    {
      std::size_t local_bad = pairs;
      DegeneracyWitness local_witness;
#pragma omp for schedule(dynamic, 64) nowait
      for (std::size_t k = 0; k < pairs; ++k) {
        if (k >= local_bad) continue;
        DegeneracyWitness w;
        if (!check_pair(inst, matchings, table, index[k].first, index[k].second, w)) {
          local_bad = k;
          local_witness = w;
        }
      }
#pragma omp critical
      if (local_bad < first_bad) {
        first_bad = local_bad;
        best_witness = local_witness;
      }
    }
  } else {
    for (std::size_t k = 0; k < pairs; ++k) {
      DegeneracyWitness w;
      if (!check_pair(inst, matchings, table, index[k].first, index[k].second, w)) {
        first_bad = k;
        best_witness = w;
        break;
      }
    }
  }

  if (first_bad == pairs) return {true, std::nullopt};
  return {false, best_witness};
}

}  // namespace

NonDegeneracyResult is_non_degenerate(const Instance& inst) {
  return scan(inst, true);
}

NonDegeneracyResult is_non_degenerate_serial(const Instance& inst) {
  return scan(inst, false);
}

namespace {

EdgeDir direct_edge(Value own_here, Value own_there, Value partner_here,
                    Value partner_there) {
  const bool p_prefers = own_here > own_there;
  const bool q_prefers = partner_here > partner_there;
  if (p_prefers && q_prefers)
    throw std::invalid_argument(
        "comparison_digraph: bidirected edge; inputs are not both stable");
  if (p_prefers) return EdgeDir::ToQ;
  if (q_prefers) return EdgeDir::ToP;
  return EdgeDir::Undirected;
}

}  // namespace

ComparisonDigraph comparison_digraph(const Instance& inst, const Outcome& o1,
                                     const Outcome& o2) {
  const int n = inst.n();
  if (o1.matching.n() != n || o2.matching.n() != n)
    throw std::invalid_argument("comparison_digraph: dimension mismatch");

  ComparisonDigraph g;
  const Outcome* outs[2] = {&o1, &o2};
  for (int s = 0; s < 2; ++s) {
    const Outcome& here = *outs[s];
    const Outcome& there = *outs[1 - s];
    for (int i = 0; i < n; ++i) {
      const int j = here.matching.q_of(i);
      g.edges.push_back(
          {i, j, s, direct_edge(here.u[i], there.u[i], here.v[j], there.v[j])});
    }
  }

  // Components of the union graph.  Degrees are at most two, so every
  // component is a path or a cycle; with total matchings on both sides they
  // are all cycles (a pair matched identically twice forms a two-cycle).
  std::vector<int> comp_of(2 * n, -1);  // p: 0..n-1, q: n..2n-1
  for (int start = 0; start < 2 * n; ++start) {
    if (comp_of[start] >= 0) continue;
    DigraphComponent comp;
    std::vector<int> stack{start};
    comp_of[start] = static_cast<int>(g.components.size());
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (v < n)
        comp.p_vertices.push_back(v);
      else
        comp.q_vertices.push_back(v - n);
      for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const int pv = g.edges[e].p, qv = g.edges[e].q + n;
        if (pv != v && qv != v) continue;
        const int other = pv == v ? qv : pv;
        if (comp_of[other] < 0) {
          comp_of[other] = comp_of[start];
          stack.push_back(other);
        }
      }
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e)
      if (comp_of[g.edges[e].p] == comp_of[start]) comp.edges.push_back(static_cast<int>(e));
    // Path components would need an endpoint of degree one; every vertex
    // here carries one edge per matching.
    comp.cycle = true;
    g.components.push_back(std::move(comp));
  }

  for (const DigraphComponent& comp : g.components) {
    bool to_q_from[2] = {false, false};
    bool any_directed = false;
    for (int e : comp.edges) {
      const DigraphEdge& edge = g.edges[e];
      if (edge.dir == EdgeDir::Undirected) continue;
      any_directed = true;
      // Around the cycle, a source-0 edge toward Q points the same way as a
      // source-1 edge toward P.
      const bool forward = (edge.dir == EdgeDir::ToQ) == (edge.source == 0);
      to_q_from[forward ? 0 : 1] = true;
    }
    if (to_q_from[0] && to_q_from[1]) g.uniform_orientation = false;
    if (!any_directed && comp.edges.size() > 2) g.indifferent_only_component = true;
    if (!any_directed && comp.edges.size() == 2) {
      // Two-cycle on distinct pairs (not the exempt identical-match case).
      const DigraphEdge& a = g.edges[comp.edges[0]];
      const DigraphEdge& b = g.edges[comp.edges[1]];
      if (a.p != b.p || a.q != b.q) g.indifferent_only_component = true;
    }
  }

  for (const DigraphEdge& edge : g.edges) {
    const Outcome& here = *outs[edge.source];
    const Outcome& there = *outs[1 - edge.source];
    if (edge.dir == EdgeDir::ToP && here.u[edge.p] == there.u[edge.p] &&
        !inst.q_rigid(edge.q))
      g.flexible_prefers_indifferent = true;
    if (edge.dir == EdgeDir::ToQ && here.v[edge.q] == there.v[edge.q] &&
        !inst.p_rigid(edge.p))
      g.flexible_prefers_indifferent = true;
  }
  return g;
}

namespace {

std::optional<Outcome> bound_under_p(const Instance& inst, const Outcome& o1,
                                     const Outcome& o2, bool join_side) {
  const int n = inst.n();
  const ComparisonDigraph g = comparison_digraph(inst, o1, o2);

  std::vector<Value> u(n), v(n);
  for (int i = 0; i < n; ++i)
    u[i] = join_side ? std::max(o1.u[i], o2.u[i]) : std::min(o1.u[i], o2.u[i]);
  for (int j = 0; j < n; ++j)
    v[j] = join_side ? std::min(o1.v[j], o2.v[j]) : std::max(o1.v[j], o2.v[j]);

  // Per component, pick the matching whose own edges point toward Q (its
  // P-agents prefer it); the meet picks the other one.
  std::vector<int> q_of_p(n, -1);
  for (const DigraphComponent& comp : g.components) {
    bool prefer[2] = {false, false};
    for (int e : comp.edges) {
      const DigraphEdge& edge = g.edges[e];
      if (edge.dir == EdgeDir::ToQ) prefer[edge.source] = true;
      if (edge.dir == EdgeDir::ToP) prefer[1 - edge.source] = true;
    }
    int pick = 0;
    if (prefer[0] != prefer[1]) pick = prefer[0] ? 0 : 1;
    if (!join_side) pick = 1 - pick;
    const Outcome& chosen = pick == 0 ? o1 : o2;
    for (int i : comp.p_vertices) q_of_p[i] = chosen.matching.q_of(i);
  }

  Outcome candidate{Matching(q_of_p), std::move(u), std::move(v)};
  const Verdict verdict = classify(inst, candidate);
  if (verdict == Verdict::Stable || verdict == Verdict::StronglyStable)
    return candidate;
  return std::nullopt;
}

}  // namespace

std::optional<Outcome> join(const Instance& inst, const Outcome& o1,
                            const Outcome& o2) {
  return bound_under_p(inst, o1, o2, true);
}

std::optional<Outcome> meet(const Instance& inst, const Outcome& o1,
                            const Outcome& o2) {
  return bound_under_p(inst, o1, o2, false);
}

MatchingSearch matching_from_payoff(const Instance& inst,
                                    const std::vector<Value>& u,
                                    const std::vector<Value>& v) {
  constexpr int kGuard = 6;
  if (inst.n() > kGuard)
    throw SizeGuardError("matching_from_payoff", inst.n(), kGuard);
  MatchingSearch result;
  for (const Matching& m : enumerate_matchings(inst.n())) {
    const Verdict verdict = classify(inst, Outcome{m, u, v});
    if (verdict != Verdict::Stable && verdict != Verdict::StronglyStable) continue;
    ++result.count;
    if (!result.matching) result.matching = m;
  }
  if (result.count == 0) {
    result.status = MatchingSearch::Status::None;
    result.matching.reset();
  } else if (result.count == 1) {
    result.status = MatchingSearch::Status::Unique;
  } else {
    result.status = MatchingSearch::Status::Multiple;
    result.matching.reset();
  }
  return result;
}

}  // namespace rifle
