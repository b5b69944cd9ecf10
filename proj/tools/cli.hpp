#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pidecomp::cli {

/// Runs one command line (without the program name). Reports go to `out`
/// (or the --report file), diagnostics and usage to `err`.
///
/// Exit codes: 0 success or property holds, 1 property refuted, 2 input error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pidecomp::cli
