#pragma once

#include "flc/graph.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace flc::cli {

/// Runs the command line `args` (without the program name). Returns the exit
/// status: 0 on success, nonzero exactly when an error was reported on err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses a graph spec such as "path:3", "cycle:9", "empty:9" or
/// "connected:32:480:7" (n:m:seed, seed defaults to 1).
Graph parse_graph_spec(const std::string& spec);

} // namespace flc::cli
