#pragma once

#include <compare>
#include <string>
#include <vector>

#include "rifle/core.hpp"

namespace rifle {

enum class Verdict { Infeasible, Feasible, Stable, StronglyStable };

std::string to_string(Verdict v);

struct PairRef {
  int p = 0;
  int q = 0;
  auto operator<=>(const PairRef&) const = default;
};

struct AgentRef {
  enum class Side { P, Q };
  Side side = Side::P;
  int index = 0;
  auto operator<=>(const AgentRef&) const = default;
};

// Feasibility is individual rationality + the rigidity rule + Pareto
// optimality (payoff sum equals total productivity).
struct FeasibilityReport {
  std::vector<AgentRef> ir_violations;
  std::vector<PairRef> rigidity_violations;
  Value pareto_gap = 0;  // sum(u) + sum(v) - T_mu

  bool feasible() const {
    return ir_violations.empty() && rigidity_violations.empty() && pareto_gap == 0;
  }
};

struct StabilityReport {
  std::vector<PairRef> blocking_pairs;
  std::vector<PairRef> weak_blocking_pairs;  // rigid pairs only
  std::vector<PairRef> side_payment_pairs;   // matched pairs with u+v != alpha
};

FeasibilityReport check_feasibility(const Instance& inst, const Outcome& o);

// Every pair violating its class condition: a flexible pair with
// u_i + v_j < alpha_ij, or a rigid pair where both sides fall short of their
// prescribed shares.  Matched pairs are scanned too; a feasible matched pair
// can never block, so hits there indicate a corrupted outcome.
std::vector<PairRef> blocking_pairs(const Instance& inst, const Outcome& o);

// Rigid pairs where one side sits exactly at its prescribed share and the
// other side would strictly gain.  Flexible pairs can never weakly block.
std::vector<PairRef> weak_blocking_pairs(const Instance& inst, const Outcome& o);

std::vector<PairRef> side_payment_pairs(const Instance& inst, const Outcome& o);

StabilityReport stability_report(const Instance& inst, const Outcome& o);

// Highest verdict whose conditions hold.  A Stable verdict also asserts the
// no-side-payment identity u_i + v_j = alpha_ij on matched pairs.
Verdict classify(const Instance& inst, const Outcome& o);

}  // namespace rifle
