#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pfaff::cli {

inline constexpr const char* kToolName = "pfaff";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "report-v1";

/// Runs one CLI invocation (args exclude the program name). Writes
/// exactly one JSON report to `out` on success; diagnostics go to
/// `err`. Returns 0 for a true/ok verdict, 1 for a false verdict,
/// 2 for any input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pfaff::cli
