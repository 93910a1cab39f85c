#pragma once

#include <string>

#include "json.hpp"
#include "rifle/core.hpp"
#include "rifle/generator.hpp"
#include "rifle/solver.hpp"

namespace rifle::cli {

using nlohmann::json;

json cmd_solve(const std::string& instance_path, bool trace);
json cmd_verify(const std::string& instance_path, const std::string& outcome_path);
json cmd_oracle(const std::string& instance_path);
json cmd_lattice(const std::string& instance_path);
json cmd_nondegen(const std::string& instance_path);
std::string cmd_gen(const GenParams& params);

// Human-readable rendering; solve shows the price/value tables per recorded
// transition when a trace is present and the instance is supplied (maximal
// entries per row are bracketed).
std::string render_text(const json& report, const Instance* inst = nullptr);

}  // namespace rifle::cli
