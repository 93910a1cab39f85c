#include "rifle/solver.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "rifle/errors.hpp"

namespace rifle {

bool SolverState::injective() const {
  std::vector<std::uint8_t> seen(n, 0);
  for (int q : proposal) {
    if (q < 0) return false;
    if (seen[q]) return false;
    seen[q] = 1;
  }
  return true;
}

std::vector<int> SolverState::proposer_count() const {
  std::vector<int> count(n, 0);
  for (int q : proposal)
    if (q >= 0) ++count[q];
  return count;
}

std::vector<PairRef> SolverState::barred_pairs() const {
  std::vector<PairRef> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (is_barred(i, j)) out.push_back({i, j});
  return out;
}

Value proposal_value(const Instance& inst, const SolverState& st, int i, int j) {
  const Value x = st.prices[j];
  if (inst.pair_class(i, j) == PairClass::Flexible) return inst.alpha(i, j) - x;
  if (st.is_barred(i, j) || x > inst.gamma(i, j)) return 0;
  return inst.beta(i, j);
}

std::vector<int> demand_set(const Instance& inst, const SolverState& st, int i) {
  const int n = inst.n();
  Value best = proposal_value(inst, st, i, 0);
  for (int j = 1; j < n; ++j) best = std::max(best, proposal_value(inst, st, i, j));
  std::vector<int> out;
  for (int j = 0; j < n; ++j)
    if (proposal_value(inst, st, i, j) == best) out.push_back(j);
  return out;
}

bool live_pair(const Instance& inst, const SolverState& st, int i, int j) {
  if (inst.pair_class(i, j) == PairClass::Flexible) return true;
  return !st.is_barred(i, j) && st.prices[j] <= inst.gamma(i, j);
}

bool reassign_proposals(const Instance& inst, SolverState& st) {
  bool changed = false;
  for (int i = 0; i < st.n; ++i) {
    const std::vector<int> d = demand_set(inst, st, i);
    if (st.proposal[i] >= 0 &&
        std::find(d.begin(), d.end(), st.proposal[i]) != d.end() &&
        live_pair(inst, st, i, st.proposal[i]))
      continue;
    // Rejected rigid pairs stay in the demand set at value zero but are
    // never proposable again; while the map is not injective some live
    // option always exists (an unproposed agent is never barred).
    int pick = -1;
    for (int j : d)
      if (live_pair(inst, st, i, j)) {
        pick = j;
        break;
      }
    if (pick < 0)
      throw std::logic_error("reassign: no live option in the demand set");
    st.proposal[i] = pick;
    changed = true;
  }
  return changed;
}

SolverState initial_state(const Instance& inst) {
  const int n = inst.n();
  SolverState st;
  st.n = n;
  st.prices.assign(n, 0);
  st.proposal.assign(n, -1);
  st.barred.assign(static_cast<std::size_t>(n) * n, 0);

  // Per-column price ceiling plus room for the bookkeeping transitions.
  Value bound = 1;
  for (int j = 0; j < n; ++j) {
    Value col = 0;
    for (int i = 0; i < n; ++i)
      col = std::max({col, inst.gamma(i, j), inst.alpha(i, j)});
    bound = std::max(bound, col + 1);
  }
  const long double estimate = static_cast<long double>(n) *
                               (static_cast<long double>(bound) +
                                static_cast<long double>(n) * n);
  constexpr long kBudgetCap = std::numeric_limits<long>::max() / 2;
  st.budget = estimate > static_cast<long double>(kBudgetCap)
                  ? kBudgetCap
                  : static_cast<long>(estimate);

  reassign_proposals(inst, st);
  return st;
}

QRelation q_relation(const Instance& inst, const SolverState& st) {
  const int n = st.n;
  QRelation rel;
  rel.n = n;
  rel.direct.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    const int j = st.proposal[i];
    if (j < 0) continue;
    for (int k : demand_set(inst, st, i))
      if (live_pair(inst, st, i, k))
        rel.direct[static_cast<std::size_t>(j) * n + k] = 1;
  }
  rel.reach = rel.direct;
  for (int j = 0; j < n; ++j) rel.reach[static_cast<std::size_t>(j) * n + j] = 1;
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      if (rel.reach[static_cast<std::size_t>(a) * n + k])
        for (int b = 0; b < n; ++b)
          if (rel.reach[static_cast<std::size_t>(k) * n + b])
            rel.reach[static_cast<std::size_t>(a) * n + b] = 1;
  return rel;
}

namespace {

void bump(SolverState& st) {
  ++st.step;
  if (st.step > st.budget)
    throw BudgetError("solver exceeded its step budget of " +
                      std::to_string(st.budget));
}

bool rigidly_proposed(const Instance& inst, const SolverState& st, int j) {
  for (int i = 0; i < st.n; ++i)
    if (st.proposal[i] == j && inst.pair_class(i, j) == PairClass::Rigid)
      return true;
  return false;
}

}  // namespace

bool subprocess_a_sweep(const Instance& inst, SolverState& st) {
  const int n = st.n;
  bool changed = false;

  // Decide all rigidly proposed Q-agents against the proposal map as it
  // stands at the start of the sweep, then reassign once.
  const std::vector<int> proposal = st.proposal;
  for (int j = 0; j < n; ++j) {
    std::vector<int> rigid_proposers;
    for (int i = 0; i < n; ++i)
      if (proposal[i] == j && inst.pair_class(i, j) == PairClass::Rigid)
        rigid_proposers.push_back(i);
    if (rigid_proposers.empty()) continue;

    // The winner is the live proposer of maximal gamma (lowest index on
    // ties).  Proposals whose gamma fell below the price are already
    // rejected and only get barred.
    int winner = -1;
    for (int i : rigid_proposers) {
      if (st.is_barred(i, j) || inst.gamma(i, j) < st.prices[j]) continue;
      if (winner < 0 || inst.gamma(i, j) > inst.gamma(winner, j)) winner = i;
    }
    if (winner >= 0 && st.prices[j] != inst.gamma(winner, j)) {
      st.prices[j] = inst.gamma(winner, j);
      changed = true;
    }
    for (int i : rigid_proposers) {
      if (i == winner || st.is_barred(i, j)) continue;
      st.bar(i, j);
      changed = true;
    }
  }

  if (reassign_proposals(inst, st)) changed = true;
  return changed;
}

void subprocess_a(const Instance& inst, SolverState& st) {
  while (subprocess_a_sweep(inst, st)) bump(st);
}

namespace {

struct BPath {
  std::vector<int> vertices;  // q-indices along the path
};

// Breadth-first search over ~ from src; returns the shortest path to a
// vertex satisfying target, visiting neighbors in index order.
bool bfs_path(const QRelation& rel, int src, const std::vector<std::uint8_t>& target,
              BPath& out) {
  const int n = rel.n;
  std::vector<int> parent(n, -2);
  parent[src] = -1;
  std::deque<int> queue{src};
  int hit = target[src] ? src : -3;
  while (hit == -3 && !queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    for (int b = 0; b < n && hit == -3; ++b) {
      if (parent[b] != -2 || !rel.related(a, b)) continue;
      parent[b] = a;
      if (target[b]) hit = b;
      queue.push_back(b);
    }
  }
  if (hit == -3) return false;
  out.vertices.clear();
  for (int v = hit; v != -1; v = parent[v]) out.vertices.push_back(v);
  std::reverse(out.vertices.begin(), out.vertices.end());
  return true;
}

// Lowest-index proposer of q_a that can also live-propose to q_b.
int edge_witness(const Instance& inst, const SolverState& st,
                 const std::vector<std::vector<int>>& demand, int a, int b) {
  for (int i = 0; i < st.n; ++i)
    if (st.proposal[i] == a && live_pair(inst, st, i, b) &&
        std::find(demand[i].begin(), demand[i].end(), b) != demand[i].end())
      return i;
  throw std::logic_error("subprocess B: path edge without witness");
}

void shift_along(const Instance& inst, SolverState& st,
                 const std::vector<std::vector<int>>& demand, const BPath& path) {
  const auto m = path.vertices.size();
  std::vector<int> witness(m > 0 ? m - 1 : 0);
  for (std::size_t l = 0; l + 1 < m; ++l)
    witness[l] =
        edge_witness(inst, st, demand, path.vertices[l], path.vertices[l + 1]);
  for (std::size_t l = 0; l + 1 < m; ++l)
    st.proposal[witness[l]] = path.vertices[l + 1];
}

}  // namespace

BApplied subprocess_b(const Instance& inst, SolverState& st) {
  const int n = st.n;
  const std::vector<int> count = st.proposer_count();
  std::vector<int> multi;
  for (int j = 0; j < n; ++j)
    if (count[j] >= 2) multi.push_back(j);
  if (multi.empty()) return BApplied::None;

  const QRelation rel = q_relation(inst, st);
  std::vector<std::vector<int>> demand(n);
  for (int i = 0; i < n; ++i) demand[i] = demand_set(inst, st, i);

  std::vector<std::uint8_t> no_proposer(n, 0), rigid_prop(n, 0);
  for (int j = 0; j < n; ++j) {
    no_proposer[j] = count[j] == 0 ? 1 : 0;
    rigid_prop[j] = rigidly_proposed(inst, st, j) ? 1 : 0;
  }

  // Case 1: augment the image of mu by routing the path into an agent
  // without proposers.
  for (int src : multi) {
    BPath path;
    if (!bfs_path(rel, src, no_proposer, path)) continue;
    shift_along(inst, st, demand, path);
    return BApplied::Case1;
  }

  // Case 2: route the path into a rigidly proposed agent, unassign its rigid
  // proposer and bar that pair for good.  The source itself may carry the
  // rigid proposal (single-vertex path).  The proposer to evict is the one
  // holding the rigid proposal before the shift.
  for (int src : multi) {
    BPath path;
    if (!bfs_path(rel, src, rigid_prop, path)) continue;
    const int tail = path.vertices.back();
    int rigid_proposer = -1;
    for (int i = 0; i < n; ++i)
      if (st.proposal[i] == tail && inst.pair_class(i, tail) == PairClass::Rigid) {
        rigid_proposer = i;
        break;
      }
    if (rigid_proposer < 0)
      throw std::logic_error("subprocess B: case 2 endpoint lost its rigid proposal");
    shift_along(inst, st, demand, path);
    st.proposal[rigid_proposer] = -1;
    st.bar(rigid_proposer, tail);
    return BApplied::Case2;
  }
  return BApplied::None;
}

void subprocess_c(const Instance& inst, SolverState& st) {
  const int n = st.n;
  const std::vector<int> count = st.proposer_count();
  const QRelation rel = q_relation(inst, st);

  std::vector<std::uint8_t> bad(n, 0);
  for (int j = 0; j < n; ++j)
    if (count[j] == 0 || rigidly_proposed(inst, st, j)) bad[j] = 1;

  std::vector<std::uint8_t> in_m(n, 0);
  for (int j = 0; j < n; ++j) {
    bool from_multi = false;
    for (int m = 0; m < n && !from_multi; ++m)
      if (count[m] >= 2 && rel.connected(m, j)) from_multi = true;
    if (!from_multi) continue;
    bool tainted = false;
    for (int b = 0; b < n && !tainted; ++b)
      if (bad[b] && rel.connected(j, b)) tainted = true;
    if (!tainted) in_m[j] = 1;
  }

  bool any = false;
  for (int j = 0; j < n; ++j)
    if (in_m[j]) {
      ++st.prices[j];
      any = true;
    }
  if (!any)
    throw std::logic_error("subprocess C: empty over-demanded set while map not injective");
  // A unit raise on a demand-closed set keeps every current proposal
  // maximal, so the reassignment must not move anything.
  if (reassign_proposals(inst, st))
    throw std::logic_error("subprocess C: price raise displaced a proposal");
}

std::string to_string(Phase p) {
  switch (p) {
    case Phase::Init: return "init";
    case Phase::A: return "A";
    case Phase::B1: return "B1";
    case Phase::B2: return "B2";
    case Phase::C: return "C";
  }
  return "?";
}

namespace {

void record(const SolverState& st, Phase phase, std::vector<TraceRecord>* trace) {
  if (!trace) return;
  trace->push_back({st.step, phase, st.prices, st.proposal, st.barred_pairs()});
}

Outcome extract(const Instance& inst, const SolverState& st) {
  const int n = st.n;
  Outcome o;
  o.matching = Matching(st.proposal);
  o.u.assign(n, 0);
  o.v = st.prices;
  for (int i = 0; i < n; ++i) {
    const int j = st.proposal[i];
    if (inst.pair_class(i, j) == PairClass::Flexible) {
      o.u[i] = inst.alpha(i, j) - st.prices[j];
    } else {
      o.u[i] = inst.beta(i, j);
      o.v[j] = inst.gamma(i, j);
    }
  }
  return o;
}

}  // namespace

SolveResult solve(const Instance& inst, const SolveOptions& options) {
  if (inst.n() == 0)
    return {Outcome{Matching(), {}, {}}, {}, 0};

  SolverState st = initial_state(inst);
  SolveResult result;
  std::vector<TraceRecord>* trace = options.trace ? &result.trace : nullptr;
  record(st, Phase::Init, trace);

  while (!st.injective()) {
    while (subprocess_a_sweep(inst, st)) {
      bump(st);
      record(st, Phase::A, trace);
      if (st.injective()) break;
    }
    if (st.injective()) break;

    const BApplied applied = subprocess_b(inst, st);
    if (applied != BApplied::None) {
      bump(st);
      record(st, applied == BApplied::Case1 ? Phase::B1 : Phase::B2, trace);
      continue;
    }

    subprocess_c(inst, st);
    bump(st);
    record(st, Phase::C, trace);
  }

  result.outcome = extract(inst, st);
  result.steps = st.step;
  return result;
}

Outcome solve(const Instance& inst) { return solve(inst, SolveOptions{}).outcome; }

}  // namespace rifle
