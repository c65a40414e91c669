#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "sasaki/critical.hpp"

namespace sasaki {

enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitIdentityFailure = 3 };

/// 3 when any exact identity verifier failed, else 0.
int exit_code_for(const AnalysisReport& rep);

/// Entry point behind the sasaki-rays executable. `args` excludes the
/// program name. Everything destined for stdout is assembled first and
/// written to `out` in one piece.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sasaki
