#pragma once

#include <cstdint>
#include <string>

namespace lieqr {

/// Resolved configuration of one CLI run. Defaults are stable:
/// mode=modular, seed=1, multiplier=2. Every JSON report embeds the
/// resolved config (minus execution details like thread count).
struct RunConfig {
  std::string command;           // build | quadind | prove | product | cqg | expand
  std::string series;            // A | D | E
  int rank = 0;
  std::string product_spec;      // e.g. "A1,A1,D4"
  std::string fixture;           // "" | "circle"
  std::string mode = "modular";  // modular | exact
  uint64_t seed = 1;
  int multiplier = 2;
  int prime_retries = 5;
  int threads = 0;  // 0 = all cores
  int cqg_n = 0;
  std::string word;  // expand subcommand
  std::string out_path;
  std::string trace_path;
  std::string emit_structure_path;
  bool stable_output = false;  // zero elapsed_ms so reports compare bytewise
  int verbosity = 1;
};

/// Exit status contract: 0 when the run's verdict is the certified /
/// verified one, 2 on a verdict failure, 1 on usage or internal errors.
/// The JSON report lands in *report_json, human-readable output in
/// *text_out (both optional); files are written when the config names
/// paths.
int run(const RunConfig& cfg, std::string* report_json = nullptr, std::string* text_out = nullptr);

}  // namespace lieqr
