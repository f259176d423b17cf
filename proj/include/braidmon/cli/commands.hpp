#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace braidmon::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitVerification = 2;
inline constexpr int kExitBudget = 3;

// Flags shared by all subcommands. Empty strings mean "use the default".
struct Options {
  // Curve source: at most one of curve, diagram, factorization. With none
  // given the bundled Eyral-Oka curve is used.
  std::string curve;
  std::string diagram;
  std::string factorization;
  // Braid closing completion * (tau_r ... tau_1) to a power of Delta^2.
  std::string completion;

  // zvk and abelianize.
  std::string mode;        // "plain" or "decomposed"
  bool simplify = false;
  std::string quotient;    // "line" or "exceptional"
  std::string presentation;
  std::vector<std::string> homs;
  std::vector<std::string> group_files;

  // burau, orbit, distinguish.
  int strands = 4;
  std::int64_t modulus = 4;
  std::int64_t t = 3;
  bool closure = false;
  std::string word;
  std::optional<bool> reverse_strands;
  std::string blocks;
  std::string base_gens;
  std::string base_blocks;
  std::string conjugate_by;
  std::string second_diagram;
  std::string second_factorization;
  std::string scan;        // "4:3,2:1"

  // Budgets and execution.
  std::size_t closure_cap = 1'000'000;
  std::size_t orbit_cap = 1'000'000;
  std::uint64_t hom_budget = 500'000'000;
  int jobs = 1;
  std::vector<std::string> skip;
  bool timing = true;
};

// {"command", "inputs", "outputs", "timing", "versions"} plus "error"
// ({"stage", "kind", "message"}) when a stage failed.
struct RunResult {
  nlohmann::json report;
  int exit_code = kExitOk;
};

const std::vector<std::string>& CommandNames();
const std::vector<std::string>& PipelineStages();

RunResult Run(const std::string& command, const Options& options);

// The report without its timing fields; identical flags give identical dumps.
nlohmann::json StripTiming(nlohmann::json report);

std::string Render(const nlohmann::json& report, bool pretty);

// Parses argv, runs the subcommand and writes the report to out.
int Main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace braidmon::cli
