#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jackhyp::cli {

enum ExitCode { kOk = 0, kUsage = 1, kDomain = 2 };

/// Name of the optional thread-count override read at startup.
inline constexpr const char* kThreadsEnv = "JACKHYP_THREADS";

/// Applies kThreadsEnv when set. Returns false (and leaves the runtime
/// default) when the value is not a positive integer.
bool apply_thread_override();

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jackhyp::cli
