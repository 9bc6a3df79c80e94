#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace pangular::cli {

inline constexpr const char* kToolName = "pangular";
inline constexpr const char* kToolVersion = "0.1.0";

/// Exit statuses shared by every command.
enum ExitCode : int { kOk = 0, kError = 1, kViolation = 2 };

/// Parses argv-style arguments (without the program name), runs the command
/// and writes the report to `out` (or the --output file). Diagnostics go to
/// `err`. Returns the exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Executes a fully resolved run configuration. `report` receives the body;
/// the return value is the exit status.
int execute(const nlohmann::json& config, nlohmann::json& report_body, std::string& csv,
            std::ostream& err, nlohmann::json* timings = nullptr);

}  // namespace pangular::cli
