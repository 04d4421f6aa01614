#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sgraph::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Environment variable holding the default `verify --jobs` value.
inline constexpr const char* kJobsEnv = "SGRAPH_JOBS";

enum ExitCode : int { kOk = 0, kUsage = 1, kIoOrParse = 2, kVerdictFalse = 3 };

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgraph::cli
