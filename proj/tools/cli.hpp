#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace aci::cli {

struct CommandResult {
  bool ok = true;
  nlohmann::json payload;
  std::vector<std::string> provenance;
  std::string text;        // plain rendering printed without --json
  std::string error_code;  // set when !ok
  std::string message;
  bool json_output = false;  // --json was given

  nlohmann::json envelope() const;
  int exit_code() const { return ok ? 0 : 1; }
};

// Parses argv (argv[0] is the program name) and dispatches. Never throws;
// usage errors come back as error results with code "usage".
CommandResult run(const std::vector<std::string>& argv);

// Prints the result the way the acikit binary does and returns the exit code.
int emit(const CommandResult& result);

}  // namespace aci::cli
