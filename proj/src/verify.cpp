#include "rifle/verify.hpp"

#include <stdexcept>

namespace rifle {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Infeasible: return "Infeasible";
    case Verdict::Feasible: return "Feasible";
    case Verdict::Stable: return "Stable";
    case Verdict::StronglyStable: return "StronglyStable";
  }
  return "?";
}

namespace {

void check_dimensions(const Instance& inst, const Outcome& o) {
  const auto n = static_cast<std::size_t>(inst.n());
  if (o.matching.n() != inst.n() || o.u.size() != n || o.v.size() != n)
    throw std::invalid_argument("outcome dimensions do not match instance");
}

}  // namespace

FeasibilityReport check_feasibility(const Instance& inst, const Outcome& o) {
  check_dimensions(inst, o);
  FeasibilityReport rep;
  const int n = inst.n();

  for (int i = 0; i < n; ++i)
    if (o.u[i] < 0) rep.ir_violations.push_back({AgentRef::Side::P, i});
  for (int j = 0; j < n; ++j)
    if (o.v[j] < 0) rep.ir_violations.push_back({AgentRef::Side::Q, j});

  for (int i = 0; i < n; ++i) {
    const int j = o.matching.q_of(i);
    bool bad = false;
    if (inst.p_rigid(i) && o.u[i] != inst.beta(i, j)) bad = true;
    if (inst.q_rigid(j) && o.v[j] != inst.gamma(i, j)) bad = true;
    // A flexible agent matched into a rigid pair may keep more than its
    // prescribed share, never less.
    if (!inst.p_rigid(i) && inst.q_rigid(j) && o.u[i] < inst.beta(i, j)) bad = true;
    if (!inst.q_rigid(j) && inst.p_rigid(i) && o.v[j] < inst.gamma(i, j)) bad = true;
    if (bad) rep.rigidity_violations.push_back({i, j});
  }

  Value sum = 0;
  for (Value x : o.u) sum += x;
  for (Value x : o.v) sum += x;
  rep.pareto_gap = sum - total_productivity(inst, o.matching);
  return rep;
}

std::vector<PairRef> blocking_pairs(const Instance& inst, const Outcome& o) {
  check_dimensions(inst, o);
  std::vector<PairRef> out;
  const int n = inst.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (inst.pair_class(i, j) == PairClass::Flexible) {
        if (o.u[i] + o.v[j] < inst.alpha(i, j)) out.push_back({i, j});
      } else {
        if (o.u[i] < inst.beta(i, j) && o.v[j] < inst.gamma(i, j))
          out.push_back({i, j});
      }
    }
  return out;
}

std::vector<PairRef> weak_blocking_pairs(const Instance& inst, const Outcome& o) {
  check_dimensions(inst, o);
  std::vector<PairRef> out;
  const int n = inst.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (inst.pair_class(i, j) != PairClass::Rigid) continue;
      const bool p_indifferent = o.u[i] == inst.beta(i, j);
      const bool q_indifferent = o.v[j] == inst.gamma(i, j);
      const bool p_gains = o.u[i] < inst.beta(i, j);
      const bool q_gains = o.v[j] < inst.gamma(i, j);
      if ((p_indifferent && q_gains) || (q_indifferent && p_gains))
        out.push_back({i, j});
    }
  return out;
}

std::vector<PairRef> side_payment_pairs(const Instance& inst, const Outcome& o) {
  check_dimensions(inst, o);
  std::vector<PairRef> out;
  for (int i = 0; i < inst.n(); ++i) {
    const int j = o.matching.q_of(i);
    if (o.u[i] + o.v[j] != inst.alpha(i, j)) out.push_back({i, j});
  }
  return out;
}

StabilityReport stability_report(const Instance& inst, const Outcome& o) {
  StabilityReport rep;
  rep.blocking_pairs = blocking_pairs(inst, o);
  rep.weak_blocking_pairs = weak_blocking_pairs(inst, o);
  rep.side_payment_pairs = side_payment_pairs(inst, o);
  return rep;
}

Verdict classify(const Instance& inst, const Outcome& o) {
  if (!check_feasibility(inst, o).feasible()) return Verdict::Infeasible;
  if (!blocking_pairs(inst, o).empty()) return Verdict::Feasible;
  // Feasibility plus no blocking forces u_i + v_j = alpha_ij on matched
  // pairs; a violation here means the verifier itself is inconsistent.
  if (!side_payment_pairs(inst, o).empty())
    throw std::logic_error("classify: stable outcome with side payments");
  return weak_blocking_pairs(inst, o).empty() ? Verdict::StronglyStable
                                              : Verdict::Stable;
}

}  // namespace rifle
