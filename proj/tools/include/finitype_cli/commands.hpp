#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finitype_cli/serialize.hpp"

namespace finitype::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kResourceLimit = 2,
  kInvariantFailure = 3,
};

struct CommandResult {
  int exit_code = kSuccess;
  std::optional<json> document;
  /// Help text on success without a document, the error message otherwise.
  std::string message;
  /// Destination requested with --output; empty means standard output.
  std::string output_path;
};

/// args[0] is the command: type, qtype, scan, decompose, colength, probe,
/// truncation-check. Never throws; failures map to exit codes 1-3.
CommandResult run_command(const std::vector<std::string>& args);

/// Writes canonical JSON to `path`, or to standard output when empty.
void emit_report(const json& doc, const std::string& path);

}  // namespace finitype::cli
