#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mpcshield {

enum class Mode { Detect, Correct, Full, Encode, Decode };

/// Parsed `key=value` scenario file. `secret` and `shares` are mutually
/// exclusive ways to populate the players.
struct Scenario {
  std::uint64_t prime = 0;
  std::uint32_t players = 0;
  std::uint32_t threshold = 0;
  std::optional<std::uint64_t> secret;
  std::optional<std::vector<std::uint64_t>> shares;
  std::optional<std::pair<std::uint32_t, std::uint64_t>> corrupt;
  Mode mode = Mode::Full;
  std::uint64_t seed = 0;
};

/// Line-based parser; `#` starts a comment, unknown keys are rejected.
/// Throws ParseError (with line number) or ValidationError.
Scenario parse_scenario(const std::string& text);

struct RunResult {
  std::string report;
  std::string transcript;
  int exit_code = 0;
};

/// Dealer -> adversary -> detection -> correction pipeline, per mode.
RunResult run_scenario(const Scenario& scenario);

const char* mode_name(Mode mode);

}  // namespace mpcshield
