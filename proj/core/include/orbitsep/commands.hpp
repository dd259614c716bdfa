#pragma once

#include <string>
#include <vector>

#include "orbitsep/generic.hpp"
#include "orbitsep/sysfile.hpp"

namespace orbitsep {

// Knobs shared by the subcommands; defaults are the CLI defaults.
struct Params {
  std::uint32_t degree = 2;
  std::size_t max_len = 4;
  std::size_t window = 3;
  std::size_t len_limit = 12;
  std::size_t cap = kDefaultOrbitCap;
  std::uint64_t seed = 0;
  RankMethod mode = RankMethod::exact;
  std::uint32_t inv_degree = 4;
  std::size_t minor_budget = 256;
  std::vector<std::string> points;  // --point args: names or "a,b" tuples
  std::vector<std::string> probes;  // --probe args for phi-check
  std::vector<std::string> verify;  // --verify expressions (p/q)
};

struct CommandResult {
  int exit_code = 0;   // 0 ok, 1 mathematical flag raised
  std::string json;    // full machine-readable document
  std::string human;   // plain-text rendering
};

const std::vector<std::string>& command_names();

// Dispatches one subcommand against a parsed system. Throws UsageError /
// ParseError for malformed requests (CLI exit 2).
CommandResult run_command(const std::string& command, const SystemFile& sys,
                          const Params& params,
                          const std::string& input_name = "<memory>");

// Runs the built-in fixtures end to end, one pass/fail line each.
CommandResult run_selftest(const Params& params);

}  // namespace orbitsep
