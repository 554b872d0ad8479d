#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "tenstwist/scenario.hpp"

namespace tenstwist {

enum class Command { Validate, Twist, Enumerate, Dims, KeyLemma, Report };

std::optional<Command> command_from_name(std::string_view name);
std::string_view command_name(Command c);

struct RunOptions {
  enum class Format { Text, Machine };
  Format format = Format::Text;
  int trials = 500;
  std::uint64_t seed = 42;
  std::size_t max_orbits = 10000;
  std::size_t max_output = 1000;
};

// Exit codes: 0 criterion satisfied / all checks pass, 1 not satisfied /
// some check failed, 2 invalid input.
struct RunResult {
  int exit_code = 0;
  std::string output;       // rendered per RunOptions::format
  nlohmann::json machine;   // always populated
};

// The command pipeline behind the CLI. `scenario` may be null only for
// KeyLemma. Scenario parse failures are reported by the caller; this
// function assumes a validated Scenario and never throws on scenario
// content (polymer-level precondition failures map to exit code 2).
RunResult run(Command cmd, const Scenario* scenario, const RunOptions& options);

}  // namespace tenstwist
