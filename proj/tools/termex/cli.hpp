#pragma once

#include <string>
#include <vector>

namespace termex::cli {

// Runs one termex invocation. `args` is the full argv including the program
// name. Returns 0 on success, 1 on usage errors, 2 on data errors; all
// diagnostics go to stderr. Stateless, so callers may dispatch repeatedly
// in one process.
int dispatch(const std::vector<std::string>& args);

}  // namespace termex::cli
