#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "rifle/cli.hpp"
#include "rifle/errors.hpp"
#include "rifle/io.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitGuard = 3;

void emit(const nlohmann::json& report, bool text, const rifle::Instance* inst) {
  if (text)
    std::cout << rifle::cli::render_text(report, inst);
  else
    std::cout << report.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solver and verification suite for two-sided matching markets "
               "with rigid and flexible agents"};
  app.require_subcommand(1);

  std::string instance_path, outcome_path;
  bool trace = false, text = false;

  auto* solve = app.add_subcommand("solve", "Find a stable outcome");
  solve->add_option("instance", instance_path, "instance file")->required();
  solve->add_flag("--trace", trace, "record every state transition");
  solve->add_flag("--text", text, "human-readable tables instead of JSON");
  solve->add_flag("--json", "machine-readable report (default)");

  auto* verify = app.add_subcommand("verify", "Judge a given outcome");
  verify->add_option("instance", instance_path, "instance file")->required();
  verify->add_option("outcome", outcome_path, "outcome JSON file")->required();
  verify->add_flag("--text", text, "human-readable report");
  verify->add_flag("--json", "machine-readable report (default)");

  auto* oracle = app.add_subcommand("oracle", "Enumerate all integer stable outcomes");
  oracle->add_option("instance", instance_path, "instance file")->required();
  oracle->add_flag("--text", text, "human-readable report");
  oracle->add_flag("--json", "machine-readable report (default)");

  auto* lattice = app.add_subcommand("lattice", "Check join/meet closure of the stable set");
  lattice->add_option("instance", instance_path, "instance file")->required();

  auto* nondegen = app.add_subcommand("nondegen", "Check the non-degeneracy condition");
  nondegen->add_option("instance", instance_path, "instance file")->required();

  rifle::GenParams params;
  auto* gen = app.add_subcommand("gen", "Emit a seeded random instance");
  gen->add_option("--n", params.n, "agents per side")->required()
      ->check(CLI::PositiveNumber);
  gen->add_option("--max-value", params.max_value, "largest beta/gamma entry")
      ->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--rigid-prob", params.rigid_prob, "per-agent rigidity probability")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", params.seed, "random seed")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      const auto report = rifle::cli::cmd_solve(instance_path, trace);
      if (text) {
        const rifle::Instance inst = rifle::parse_instance_file(instance_path);
        emit(report, true, &inst);
      } else {
        emit(report, false, nullptr);
      }
    } else if (verify->parsed()) {
      emit(rifle::cli::cmd_verify(instance_path, outcome_path), text, nullptr);
    } else if (oracle->parsed()) {
      emit(rifle::cli::cmd_oracle(instance_path), text, nullptr);
    } else if (lattice->parsed()) {
      emit(rifle::cli::cmd_lattice(instance_path), false, nullptr);
    } else if (nondegen->parsed()) {
      emit(rifle::cli::cmd_nondegen(instance_path), false, nullptr);
    } else if (gen->parsed()) {
      std::cout << rifle::cli::cmd_gen(params);
    }
  } catch (const rifle::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const rifle::SizeGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const rifle::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
