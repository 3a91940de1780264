#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gcodes/linear_code.hpp"
#include "gcodes/partite_graph.hpp"

namespace gcodes {

enum class OutputFormat { Text, Json };

/// Parsed invocation of the `graphcode` tool.
struct RunConfig {
  std::string subcommand;              // example|build|params|bound|verify|certify|codes|graph
  std::string group_member;            // codes: info|builtin|dsum; graph: info|spectrum|validate
  std::string example_name;            // example positional or --example
  std::string graph_spec;              // --graph
  std::string inner_spec;              // --inner
  std::string assignment;              // verify positional / certify --codeword
  std::vector<std::string> positionals;  // codes/graph group arguments
  std::string builtin_name;            // codes builtin: hamming|even|rep
  unsigned builtin_r = 0;              // --r
  unsigned builtin_n = 0;              // --n
  EdgeOrderMode order = EdgeOrderMode::Canonical;
  OutputFormat format = OutputFormat::Text;
  bool format_set = false;
  DistanceEngine engine = DistanceEngine::Auto;
  unsigned workers = 1;
  std::string report_path;
};

/// Deterministic argv parse; unknown flags are rejected with a message
/// naming the offending token. The default worker count comes from
/// GRAPHCODE_WORKERS when set.
RunConfig parse_config(const std::vector<std::string>& args);

/// Executes the subcommand. Exit status: 0 success, 1 violated
/// paper-claim check or invalid certificate, 2 usage error, 3
/// capacity/numeric error (the latter two are raised as exceptions and
/// mapped by cli_main).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full entry point: parse, run, map exceptions to exit codes.
int cli_main(int argc, char** argv);

}  // namespace gcodes
