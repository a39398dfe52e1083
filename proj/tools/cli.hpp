#pragma once

#include <string>
#include <vector>

namespace lvt::cli {

/// Runs the lvt command line (arguments without the program name).
/// Returns 0 on success, 2 on usage errors, 1 on runtime failures.
int run(const std::vector<std::string>& args);

}  // namespace lvt::cli
