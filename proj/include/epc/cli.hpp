#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace epc {

/* Exit codes: 0 all verdicts computed, 1 infrastructure failure (limits,
 * I/O), 2 parse or validation error. */
enum ExitCode { exit_ok = 0, exit_infra = 1, exit_input = 2 };

struct RunConfig {
  std::string model_path;
  /* Each entry is a formula string, or a path to a formulas file. */
  std::vector<std::string> formulas;
  std::string init_state;  // optional override
  std::string init_term;   // optional override (explicit mode)
  std::size_t max_configs = 100000;
  std::uint64_t max_strategies = 1000000;
  std::string format = "text"; // "text" or "json"
  bool dump_graph = false;
  std::string dump_epistemic; // comma-separated agents, empty = off
  int jobs = 1;
};

int run_query(const RunConfig &config, std::ostream &out, std::ostream &err);

} // namespace epc
