#ifndef LIEBIDER_CLI_HPP
#define LIEBIDER_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace liebider {

inline constexpr const char* kVersion = "liebider 1.0.0";

// Exit codes of run_command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMathFailure = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternalError = 3;

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics to err.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Text rendering of a ReportDocument: scalars as "key: value", matrices
/// as right-aligned columns.
std::string render_text(const nlohmann::json& report);

}  // namespace liebider

#endif  // LIEBIDER_CLI_HPP
