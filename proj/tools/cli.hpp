#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace moyal::cli {

enum class Status { Ok, Error };

struct CommandResult {
  Status status = Status::Ok;
  int exit_code = 0;             // 0 ok, 1 domain error, 2 usage error
  nlohmann::json payload;        // operation-specific; empty on error
  std::vector<std::string> diagnostics;
  std::string output;            // what goes to stdout
  std::string error_output;      // what goes to stderr
};

/// args excludes the program name.
CommandResult run(const std::vector<std::string>& args);

}  // namespace moyal::cli
