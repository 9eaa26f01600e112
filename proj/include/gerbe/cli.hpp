#pragma once

#include <cstdint>
#include <string>

#include "gerbe/irreps.hpp"

namespace gerbe {

inline constexpr std::uint64_t kMaxBudget = 1'000'000'000;
inline constexpr int kMaxGenus = 6;

struct RunConfig {
  std::string command;  // irreps | dual | clifford-check | duality-check | oracle | rcoeff | library
  std::string input;    // file path or builtin:NAME
  std::uint64_t seed = 0;
  double tol = kMatrixTol;
  int genus_min = 0;
  int genus_max = 0;
  std::uint64_t budget = 100'000'000;
  int degree = -1;            // rcoeff
  bool characters = false;    // irreps: include the character table
  std::string dump;           // library: emit one bundled extension as JSON
};

struct RunResult {
  int exit_code = 0;       // 0 pass, 1 check failed, 2 invalid input
  std::string report;      // JSON on success or check failure
  std::string diagnostic;  // human-readable error text, empty when exit_code == 0
};

// Executes one command. Reports are deterministic byte streams for a fixed
// (input, seed, version).
RunResult run(const RunConfig& config);

// argv front end; prints the report to stdout and diagnostics to stderr.
int run_main(int argc, char** argv);

}  // namespace gerbe
