#pragma once

#include <iosfwd>
#include <string>

#include "rifle/core.hpp"

namespace rifle {

// Instance file format, one record per line, '#' starts a comment:
//   n <int>
//   rigidP <n space-separated 0/1>
//   rigidQ <n 0/1>
//   pair <i> <j> <beta> <gamma>     (1-based, exactly one line per (i, j))
Instance parse_instance(std::istream& in);
Instance parse_instance_file(const std::string& path);

std::string serialize_instance(const Instance& inst);

// FNV-1a over the canonical serialization.
std::string instance_digest(const Instance& inst);

// Outcome document: JSON {"matching": [...], "u": [...], "v": [...]} with
// 1-based Q-indices in the matching list.
Outcome parse_outcome(std::istream& in, int n);
Outcome parse_outcome_file(const std::string& path, int n);

}  // namespace rifle
