#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace starsat {

// Exit statuses: 0 success, 1 domain/infeasibility/input error, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`; STARSAT_LOG={error,info,debug} sets the diagnostic level.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CommandEntry {
  std::string_view operation;  // library operation
  std::string_view command;    // subcommand path, optionally with the selecting flag
};

// Which subcommand exposes each user-facing library operation.
std::span<const CommandEntry> command_table();

}  // namespace starsat
