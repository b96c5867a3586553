#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rouquier::cli {

/// Runs one command line. Exit codes: 0 success or a true verdict, 1 a false
/// verdict or a dataset that fails validation, 2 an input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rouquier::cli
