#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace artinian::cli {

inline constexpr const char* kSchemaVersion = "1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitInput = 2,
  kExitNotAdmissible = 3,
  kExitDegeneracy = 4,
};

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Plain-text rendering of a report: vectors in tuple notation, one key per line.
std::string render_text(const nlohmann::ordered_json& report);

}  // namespace artinian::cli
