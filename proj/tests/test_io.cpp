#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "rifle/cli.hpp"
#include "rifle/core.hpp"
#include "rifle/errors.hpp"
#include "rifle/generator.hpp"
#include "rifle/io.hpp"

using namespace rifle;

namespace {

// Writes content to a temp file and returns the path; cleaned up by the OS.
std::string temp_file(const std::string& tag, const std::string& content) {
  std::string path = "rifle_test_" + tag + ".tmp";
  std::ofstream out(path);
  out << content;
  return path;
}

std::string auction_example_file() {
  return temp_file("auction", serialize_instance(testutil::auction_example()));
}

}  // namespace

TEST_CASE("instance round trip") {
  for (int trial = 0; trial < 30; ++trial) {
    const Instance inst = generate_instance({1 + trial % 6, 9, 0.4, 100ull + trial});
    std::istringstream in(serialize_instance(inst));
    CHECK(parse_instance(in) == inst);
  }
}

TEST_CASE("instance parsing accepts comments and any pair order") {
  std::istringstream in(
      "# a small market\n"
      "n 2\n"
      "rigidP 0 1\n"
      "rigidQ 0 1  # q2 follows the recommendation\n"
      "pair 2 2 10 5\n"
      "pair 1 1 3 3\n"
      "\n"
      "pair 1 2 3 6\n"
      "pair 2 1 2 5\n");
  CHECK(parse_instance(in) == testutil::first_example());
}

TEST_CASE("instance parse errors carry line numbers") {
  SUBCASE("malformed pair line") {
    std::istringstream in("n 1\nrigidP 0\nrigidQ 0\npair 1 oops 3 3\n");
    CHECK_THROWS_WITH_AS(parse_instance(in),
                         "parse error at line 4: pair expects: pair <i> <j> <beta> <gamma>",
                         ParseError);
  }
  SUBCASE("duplicate pair") {
    std::istringstream in("n 1\nrigidP 0\nrigidQ 0\npair 1 1 1 1\npair 1 1 2 2\n");
    CHECK_THROWS_AS(parse_instance(in), ParseError);
  }
  SUBCASE("missing pair") {
    std::istringstream in("n 2\nrigidP 0 0\nrigidQ 0 0\npair 1 1 1 1\n");
    CHECK_THROWS_AS(parse_instance(in), ParseError);
  }
  SUBCASE("index out of range") {
    std::istringstream in("n 1\nrigidP 0\nrigidQ 0\npair 1 2 1 1\n");
    CHECK_THROWS_AS(parse_instance(in), ParseError);
  }
  SUBCASE("negative value") {
    std::istringstream in("n 1\nrigidP 0\nrigidQ 0\npair 1 1 -1 0\n");
    CHECK_THROWS_AS(parse_instance(in), ParseError);
  }
  SUBCASE("unknown keyword") {
    std::istringstream in("n 1\nrigidP 0\nrigidQ 0\nblah\npair 1 1 0 0\n");
    CHECK_THROWS_AS(parse_instance(in), ParseError);
  }
}

TEST_CASE("outcome document parsing") {
  std::istringstream in(R"({"matching": [2, 1], "u": [3, 2], "v": [5, 6]})");
  const Outcome o = parse_outcome(in, 2);
  CHECK(o.matching == Matching({1, 0}));
  CHECK(o.u == std::vector<Value>{3, 2});
  CHECK(o.v == std::vector<Value>{5, 6});

  std::istringstream bad(R"({"matching": [1, 1], "u": [0, 0], "v": [0, 0]})");
  CHECK_THROWS_AS(parse_outcome(bad, 2), Error);
  std::istringstream short_u(R"({"matching": [1, 2], "u": [0], "v": [0, 0]})");
  CHECK_THROWS_AS(parse_outcome(short_u, 2), Error);
}

TEST_CASE("generator determinism") {
  const GenParams params{4, 6, 0.5, 1};
  CHECK(generate_instance(params) == generate_instance(params));
  CHECK(serialize_instance(generate_instance(params)) ==
        serialize_instance(generate_instance(params)));

  const Instance zero = generate_instance({1, 0, 0.7, 7});
  CHECK(zero.beta(0, 0) == 0);
  CHECK(zero.gamma(0, 0) == 0);

  // Different seeds almost surely differ.
  GenParams other = params;
  other.seed = 2;
  CHECK(generate_instance(params) != generate_instance(other));
}

TEST_CASE("digest is stable and collision-averse across seeds") {
  const Instance a = generate_instance({3, 5, 0.5, 11});
  const Instance b = generate_instance({3, 5, 0.5, 12});
  CHECK(instance_digest(a) == instance_digest(a));
  CHECK(instance_digest(a) != instance_digest(b));
}

TEST_CASE("cmd_solve on the worked example") {
  const std::string path = auction_example_file();
  const auto report = cli::cmd_solve(path, true);
  CHECK(report["verdict"] == "Stable");
  CHECK(report["outcome"]["u"] == cli::json({9, 8, 11, 8, 7}));
  CHECK(report["outcome"]["v"] == cli::json({5, 9, 2, 2, 0}));
  CHECK(report["outcome"]["matching"] == cli::json({2, 1, 4, 3, 5}));
  REQUIRE(report.contains("trace"));
  CHECK(report["trace"][1]["prices"] == cli::json({0, 9, 0, 0, 0}));
  CHECK(report["trace"][1]["barred"] == cli::json({{2, 2}}));

  // The text rendering shows the value tables.
  const Instance inst = parse_instance_file(path);
  const std::string text = cli::render_text(report, &inst);
  CHECK(text.find("phase A") != std::string::npos);
  CHECK(text.find("[17]") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("cmd_verify reports stable with its weak blocking pair") {
  const std::string inst_path =
      temp_file("verify_inst", serialize_instance(testutil::strong_stability_example()));
  const std::string out_path = temp_file(
      "verify_out", R"({"matching": [1, 2], "u": [10, 14], "v": [8, 5]})");
  const auto report = cli::cmd_verify(inst_path, out_path);
  CHECK(report["verdict"] == "Stable");
  CHECK(report["diagnostics"]["weak_blocking_pairs"] == cli::json({{1, 2}}));
  CHECK(report["diagnostics"]["blocking_pairs"].empty());
  std::remove(inst_path.c_str());
  std::remove(out_path.c_str());
}

TEST_CASE("cmd_oracle counts the first example's stable set") {
  const std::string path =
      temp_file("oracle_inst", serialize_instance(testutil::first_example()));
  const auto report = cli::cmd_oracle(path);
  CHECK(report["count"] == 5);
  CHECK(report["p_optimal"]["u"] == cli::json({6, 10}));
  std::remove(path.c_str());
}

TEST_CASE("cmd_nondegen reports the witness coalition") {
  const std::string path =
      temp_file("nondegen_inst", serialize_instance(testutil::degenerate_example()));
  const auto report = cli::cmd_nondegen(path);
  CHECK(report["non_degenerate"] == false);
  CHECK(report["witness"]["coalition_p"] == cli::json({2}));
  CHECK(report["witness"]["coalition_q"] == cli::json({1}));
  CHECK(report["witness"]["forced_value"] == 11);
  std::remove(path.c_str());
}

TEST_CASE("cmd_lattice flags the degenerate example") {
  const std::string path =
      temp_file("lattice_inst", serialize_instance(testutil::degenerate_example()));
  const auto report = cli::cmd_lattice(path);
  CHECK(report["closed"] == false);
  CHECK(report["non_degenerate"] == false);
  std::remove(path.c_str());
}

TEST_CASE("cmd_gen round-trips through the parser") {
  const GenParams params{4, 6, 0.5, 1};
  const std::string text = cli::cmd_gen(params);
  CHECK(text == cli::cmd_gen(params));
  std::istringstream in(text);
  CHECK(parse_instance(in) == generate_instance(params));
}
