#include <iostream>

#include "finitype_cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace finitype::cli;
  const std::vector<std::string> args(argv + 1, argv + argc);
  CommandResult r = run_command(args);
  if (r.exit_code != kSuccess) {
    std::cerr << "error: " << r.message << "\n";
    return r.exit_code;
  }
  if (!r.document) {
    std::cout << r.message;
    return kSuccess;
  }
  try {
    emit_report(*r.document, r.output_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kSuccess;
}
