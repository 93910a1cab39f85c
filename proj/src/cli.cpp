#include "rifle/cli.hpp"

#include <algorithm>
#include <sstream>

#include "rifle/analysis.hpp"
#include "rifle/io.hpp"
#include "rifle/oracle.hpp"
#include "rifle/verify.hpp"

namespace rifle::cli {

namespace {

json pair_list(const std::vector<PairRef>& pairs) {
  json arr = json::array();
  for (const PairRef& pr : pairs) arr.push_back({pr.p + 1, pr.q + 1});
  return arr;
}

json agent_list(const std::vector<AgentRef>& agents) {
  json arr = json::array();
  for (const AgentRef& a : agents)
    arr.push_back((a.side == AgentRef::Side::P ? "p" : "q") +
                  std::to_string(a.index + 1));
  return arr;
}

json outcome_json(const Outcome& o) {
  json m = json::array();
  for (int i = 0; i < o.matching.n(); ++i) m.push_back(o.matching.q_of(i) + 1);
  return {{"matching", m}, {"u", o.u}, {"v", o.v}};
}

json instance_json(const Instance& inst) {
  return {{"digest", instance_digest(inst)}, {"n", inst.n()}};
}

json diagnostics_json(const Instance& inst, const Outcome& o) {
  const FeasibilityReport feas = check_feasibility(inst, o);
  const StabilityReport stab = stability_report(inst, o);
  return {{"ir_violations", agent_list(feas.ir_violations)},
          {"rigidity_violations", pair_list(feas.rigidity_violations)},
          {"pareto_gap", feas.pareto_gap},
          {"blocking_pairs", pair_list(stab.blocking_pairs)},
          {"weak_blocking_pairs", pair_list(stab.weak_blocking_pairs)},
          {"side_payment_pairs", pair_list(stab.side_payment_pairs)}};
}

json trace_json(const std::vector<TraceRecord>& trace) {
  json arr = json::array();
  for (const TraceRecord& r : trace) {
    json proposal = json::array();
    for (int q : r.proposal) proposal.push_back(q + 1);  // 0 when unassigned
    arr.push_back({{"step", r.step},
                   {"phase", to_string(r.phase)},
                   {"prices", r.prices},
                   {"proposal", proposal},
                   {"barred", pair_list(r.barred)}});
  }
  return arr;
}

}  // namespace

json cmd_solve(const std::string& instance_path, bool trace) {
  const Instance inst = parse_instance_file(instance_path);
  const SolveResult result = solve(inst, SolveOptions{trace});
  json report{{"command", "solve"},
              {"instance", instance_json(inst)},
              {"outcome", outcome_json(result.outcome)},
              {"verdict", to_string(classify(inst, result.outcome))},
              {"diagnostics", diagnostics_json(inst, result.outcome)},
              {"steps", result.steps}};
  if (trace) report["trace"] = trace_json(result.trace);
  return report;
}

json cmd_verify(const std::string& instance_path, const std::string& outcome_path) {
  const Instance inst = parse_instance_file(instance_path);
  const Outcome o = parse_outcome_file(outcome_path, inst.n());
  return {{"command", "verify"},
          {"instance", instance_json(inst)},
          {"outcome", outcome_json(o)},
          {"verdict", to_string(classify(inst, o))},
          {"diagnostics", diagnostics_json(inst, o)}};
}

json cmd_oracle(const std::string& instance_path) {
  const Instance inst = parse_instance_file(instance_path);
  const StableSet set = stable_outcomes(inst);
  json outcomes = json::array();
  for (const Outcome& o : set.outcomes) outcomes.push_back(outcome_json(o));
  json report{{"command", "oracle"},
              {"instance", instance_json(inst)},
              {"count", set.outcomes.size()},
              {"outcomes", outcomes}};
  if (set.outcomes.empty()) {
    report["p_optimal"] = nullptr;
  } else if (const auto best = p_optimal(set)) {
    report["p_optimal"] = outcome_json(*best);
  } else {
    report["p_optimal"] = "NotUnique";
  }
  return report;
}

json cmd_lattice(const std::string& instance_path) {
  const Instance inst = parse_instance_file(instance_path);
  const StableSet set = stable_outcomes(inst);
  const auto member = [&](const Outcome& o) {
    return std::find(set.outcomes.begin(), set.outcomes.end(), o) !=
           set.outcomes.end();
  };

  bool closed = true;
  json failures = json::array();
  for (std::size_t a = 0; a < set.outcomes.size(); ++a)
    for (std::size_t b = a; b < set.outcomes.size(); ++b) {
      const auto note_failure = [&](const char* op) {
        closed = false;
        failures.push_back({{"op", op}, {"pair", {a, b}}});
      };
      const auto up = join(inst, set.outcomes[a], set.outcomes[b]);
      if (!up || !member(*up)) note_failure("join");
      const auto down = meet(inst, set.outcomes[a], set.outcomes[b]);
      if (!down || !member(*down)) note_failure("meet");
    }

  json report{{"command", "lattice"},
              {"instance", instance_json(inst)},
              {"count", set.outcomes.size()},
              {"closed", closed},
              {"failures", failures},
              {"non_degenerate", inst.n() <= 5 ? json(is_non_degenerate(inst).non_degenerate)
                                               : json(nullptr)}};

  // The iterated join reaches the P-optimal outcome whenever every join
  // exists.
  if (!set.outcomes.empty() && closed) {
    Outcome acc = set.outcomes.front();
    bool ok = true;
    for (std::size_t k = 1; k < set.outcomes.size() && ok; ++k) {
      const auto up = join(inst, acc, set.outcomes[k]);
      if (up)
        acc = *up;
      else
        ok = false;
    }
    const auto best = p_optimal(set);
    report["iterated_join_equals_p_optimal"] = ok && best && acc == *best;
  }
  return report;
}

json cmd_nondegen(const std::string& instance_path) {
  const Instance inst = parse_instance_file(instance_path);
  const NonDegeneracyResult result = is_non_degenerate(inst);
  json report{{"command", "nondegen"},
              {"instance", instance_json(inst)},
              {"non_degenerate", result.non_degenerate}};
  if (result.witness) {
    const DegeneracyWitness& w = *result.witness;
    json mu1 = json::array(), mu2 = json::array();
    for (int i = 0; i < w.mu1.n(); ++i) mu1.push_back(w.mu1.q_of(i) + 1);
    for (int i = 0; i < w.mu2.n(); ++i) mu2.push_back(w.mu2.q_of(i) + 1);
    json coalition_p = json::array(), coalition_q = json::array();
    for (int i = 0; i < inst.n(); ++i)
      if ((w.p_mask >> i) & 1) coalition_p.push_back(i + 1);
    for (int j = 0; j < inst.n(); ++j)
      if ((w.q_mask >> j) & 1) coalition_q.push_back(j + 1);
    report["witness"] = {{"mu1", mu1},
                         {"mu2", mu2},
                         {"coalition_p", coalition_p},
                         {"coalition_q", coalition_q},
                         {"forced_value", w.forced_value}};
  } else {
    report["witness"] = nullptr;
  }
  return report;
}

std::string cmd_gen(const GenParams& params) {
  return serialize_instance(generate_instance(params));
}

namespace {

void render_outcome(std::ostringstream& out, const json& o) {
  out << "  mu(P) = [";
  for (std::size_t i = 0; i < o["matching"].size(); ++i)
    out << (i ? ", " : "") << "q" << o["matching"][i].get<int>();
  out << "]\n  u = " << o["u"].dump() << "\n  v = " << o["v"].dump() << "\n";
}

SolverState state_from_record(const Instance& inst, const json& rec) {
  SolverState st;
  st.n = inst.n();
  st.prices.clear();
  for (const auto& p : rec["prices"]) st.prices.push_back(p.get<Value>());
  st.proposal.clear();
  for (const auto& q : rec["proposal"]) st.proposal.push_back(q.get<int>() - 1);
  st.barred.assign(static_cast<std::size_t>(st.n) * st.n, 0);
  for (const auto& pr : rec["barred"])
    st.bar(pr[0].get<int>() - 1, pr[1].get<int>() - 1);
  return st;
}

// Value matrix at one trace step, row maxima bracketed.
void render_value_matrix(std::ostringstream& out, const Instance& inst,
                         const json& rec) {
  const SolverState st = state_from_record(inst, rec);
  const int n = inst.n();
  out << "      ";
  for (int j = 0; j < n; ++j)
    out << " q" << j + 1 << (inst.q_rigid(j) ? "(r) " : "    ");
  out << "\n";
  for (int i = 0; i < n; ++i) {
    out << "  p" << i + 1 << (inst.p_rigid(i) ? "(r)" : "   ");
    Value best = proposal_value(inst, st, i, 0);
    for (int j = 1; j < n; ++j)
      best = std::max(best, proposal_value(inst, st, i, j));
    for (int j = 0; j < n; ++j) {
      const Value v = proposal_value(inst, st, i, j);
      std::ostringstream cell;
      if (v == best)
        cell << '[' << v << ']';
      else
        cell << v;
      out << ' ';
      out.width(6);
      out << cell.str();
    }
    out << "\n";
  }
}

}  // namespace

std::string render_text(const json& report, const Instance* inst) {
  std::ostringstream out;
  const std::string command = report.value("command", "?");
  out << command << " (instance " << report["instance"]["digest"].get<std::string>()
      << ", n = " << report["instance"]["n"].get<int>() << ")\n";

  if (report.contains("trace")) {
    for (const auto& rec : report["trace"]) {
      out << "step " << rec["step"].get<long>() << "  phase "
          << rec["phase"].get<std::string>() << "  v = " << rec["prices"].dump()
          << "  mu(P) = [";
      bool first = true;
      for (const auto& q : rec["proposal"]) {
        out << (first ? "" : ", ");
        first = false;
        const int qi = q.get<int>();
        if (qi == 0)
          out << "-";
        else
          out << "q" << qi;
      }
      out << "]";
      if (!rec["barred"].empty()) out << "  barred = " << rec["barred"].dump();
      out << "\n";
      if (inst) render_value_matrix(out, *inst, rec);
    }
  }

  if (report.contains("outcome") && report["outcome"].is_object())
    render_outcome(out, report["outcome"]);
  if (report.contains("verdict"))
    out << "  verdict: " << report["verdict"].get<std::string>() << "\n";
  if (report.contains("diagnostics")) {
    const auto& d = report["diagnostics"];
    if (!d["blocking_pairs"].empty())
      out << "  blocking pairs: " << d["blocking_pairs"].dump() << "\n";
    if (!d["weak_blocking_pairs"].empty())
      out << "  weak blocking pairs: " << d["weak_blocking_pairs"].dump() << "\n";
    if (!d["ir_violations"].empty())
      out << "  IR violations: " << d["ir_violations"].dump() << "\n";
    if (!d["rigidity_violations"].empty())
      out << "  rigidity violations: " << d["rigidity_violations"].dump() << "\n";
    if (d["pareto_gap"].get<long long>() != 0)
      out << "  pareto gap: " << d["pareto_gap"].get<long long>() << "\n";
  }

  if (command == "oracle") {
    out << "  " << report["count"].get<std::size_t>() << " stable outcomes\n";
    for (const auto& o : report["outcomes"]) render_outcome(out, o);
    out << "  P-optimal: " << report["p_optimal"].dump() << "\n";
  }
  if (command == "lattice")
    out << "  closed: " << (report["closed"].get<bool>() ? "yes" : "no") << "\n";
  if (command == "nondegen")
    out << "  non-degenerate: "
        << (report["non_degenerate"].get<bool>() ? "yes" : "no") << "\n"
        << "  witness: " << report["witness"].dump() << "\n";
  return out.str();
}

}  // namespace rifle::cli
