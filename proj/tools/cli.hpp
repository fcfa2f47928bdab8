#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gbdecode::cli {

/// Exit codes of the gbdecode tool.
enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kUncorrectable = 2,
  kArtifactMismatch = 3,
  kDecodeFailure = 4,
  kBudgetExhausted = 5,
  kVerifyFailed = 6,
};

/// Environment variable overriding the default pair budget of precompute.
inline constexpr const char* kBudgetEnv = "GBDECODE_BUDGET";

/// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gbdecode::cli
