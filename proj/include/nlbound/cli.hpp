#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nlbound {

enum ExitCode : int { kExitOk = 0, kExitValidation = 1, kExitNumeric = 2 };

/// Runs one CLI invocation; args excludes the program name. Results go to
/// `out`, a single-line JSON error object to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "0.5,1,2" or an inclusive range "start:stop:step".
std::vector<double> parse_T_list(const std::string& text);

}  // namespace nlbound
