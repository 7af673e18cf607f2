#pragma once

#include <span>
#include <stdexcept>
#include <string>

#include "statespace/scenario.hpp"

namespace statespace::cli {

// Exit codes of the statespace tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown for --help; carries the rendered help text.
struct HelpRequested {
  std::string text;
};

// argv[0] is the program name. Unknown flags, missing --scenario, unknown
// scenario names and unparsable numbers raise UsageError. --nx defaults to
// --n. The returned config has been validated.
ScenarioConfig parse_args(std::span<const char* const> argv);

// Full tool behaviour: parse, run, write; returns the process exit code.
int run_cli(std::span<const char* const> argv);

}  // namespace statespace::cli
