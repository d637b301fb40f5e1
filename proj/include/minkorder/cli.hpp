#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minkorder::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsageError = 2;

/// Runs one command. `args` excludes the program name. The report goes to
/// `out` and diagnostics to `err`; every report ends with a
/// `# elapsed_ms:` line, the only part that varies between runs.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minkorder::cli
