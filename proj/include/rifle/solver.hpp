#pragma once

#include <cstdint>
#include <vector>

#include "rifle/core.hpp"
#include "rifle/verify.hpp"

namespace rifle {

// Mutable state of the auction loop: current prices on Q-agents, the
// proposal map, and the set of permanently rejected rigid pairs.
//
// Invariants maintained by the subprocesses:
//   - prices never decrease,
//   - barred only grows and contains rigid pairs only,
//   - every assigned proposal lies in its proposer's demand set,
//   - a Q-agent that once had a proposer keeps at least one.
struct SolverState {
  int n = 0;
  std::vector<Value> prices;
  std::vector<int> proposal;  // P-index -> Q-index, -1 while unassigned
  std::vector<std::uint8_t> barred;  // n*n bitmap
  long step = 0;
  long budget = 0;

  bool is_barred(int i, int j) const {
    return barred[static_cast<std::size_t>(i) * n + j] != 0;
  }
  void bar(int i, int j) { barred[static_cast<std::size_t>(i) * n + j] = 1; }
  bool injective() const;
  std::vector<int> proposer_count() const;
  std::vector<PairRef> barred_pairs() const;
};

// Prices zero, proposals chosen greedily from the initial demand sets.
SolverState initial_state(const Instance& inst);

// Value of q_j to p_i at the current price.  Flexible pairs are worth the
// leftover productivity; rigid pairs are worth beta until the price passes
// gamma.  Rejection memory lives entirely in the barred set: a barred pair
// is worth nothing forever.
Value proposal_value(const Instance& inst, const SolverState& st, int i, int j);

// Argmax of proposal_value(i, .); never empty.
std::vector<int> demand_set(const Instance& inst, const SolverState& st, int i);

// A pair that can still be proposed: flexible, or rigid with the price not
// past gamma and the proposal never rejected.  Dead rigid pairs linger in
// demand sets at value zero but barring is final.
bool live_pair(const Instance& inst, const SolverState& st, int i, int j);

// Keeps still-maximal live proposals, moves the rest to the smallest live
// index in their demand set.  Returns true if anything moved.
bool reassign_proposals(const Instance& inst, SolverState& st);

// The relation q_j ~ q_k ("some proposer of q_j demands q_k") plus its
// reflexive-transitive closure.
struct QRelation {
  int n = 0;
  std::vector<std::uint8_t> direct;
  std::vector<std::uint8_t> reach;

  bool related(int j, int k) const {
    return direct[static_cast<std::size_t>(j) * n + k] != 0;
  }
  bool connected(int j, int k) const {
    return reach[static_cast<std::size_t>(j) * n + k] != 0;
  }
};

QRelation q_relation(const Instance& inst, const SolverState& st);

// One price-setting sweep over all rigidly proposed Q-agents followed by a
// reassignment; returns true if the state changed.
bool subprocess_a_sweep(const Instance& inst, SolverState& st);

// Subprocess A run to its fixpoint.
void subprocess_a(const Instance& inst, SolverState& st);

enum class BApplied { None, Case1, Case2 };

// Searches for an augmenting path from a multiply proposed Q-agent to one
// with no proposer (Case 1) or with a rigid proposal (Case 2, single-vertex
// paths allowed) and shifts proposals along it.  Case 1 is tried first;
// sources are scanned in index order with breadth-first search.
BApplied subprocess_b(const Instance& inst, SolverState& st);

// Raises prices by one on the connected over-demanded set M: Q-agents in the
// demand cone of a multiply proposed agent, none of which may reach an agent
// lacking proposers or carrying a rigid proposal.
void subprocess_c(const Instance& inst, SolverState& st);

enum class Phase { Init, A, B1, B2, C };

std::string to_string(Phase p);

struct TraceRecord {
  long step = 0;
  Phase phase = Phase::Init;
  std::vector<Value> prices;
  std::vector<int> proposal;
  std::vector<PairRef> barred;
};

struct SolveOptions {
  bool trace = false;
};

struct SolveResult {
  Outcome outcome;
  std::vector<TraceRecord> trace;
  long steps = 0;
};

// Runs the auction loop (A to fixpoint, then B with A reruns, then C) until
// the proposal map is injective, then extracts payoffs: flexible matches
// split alpha minus the price, rigid matches get their prescribed shares.
SolveResult solve(const Instance& inst, const SolveOptions& options);

Outcome solve(const Instance& inst);

}  // namespace rifle
