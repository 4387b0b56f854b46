#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nevpick::cli {

enum ExitCode : int { Pass = 0, VerdictFail = 1, InputError = 2, InternalError = 3 };

/// Runs one command; `args` excludes the program name. The report goes to
/// `out`, diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nevpick::cli
