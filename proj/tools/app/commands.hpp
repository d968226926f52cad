#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string_view>

#include "epcx/algebra.hpp"

namespace epcx::app {

enum class Mode { verify, synthesize, check_associated, solve, cauchy_demo };

[[nodiscard]] std::optional<Mode> parse_mode(std::string_view s);
[[nodiscard]] std::string_view mode_name(Mode m);

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kConfigInvalid = 2, kIoError = 3 };

inline constexpr std::uint64_t kDefaultSeed = 42;

struct RunOptions {
  Mode mode = Mode::verify;
  std::filesystem::path config;
  std::filesystem::path out = ".";
  /// Override the config's "seed" and "params".
  std::optional<std::uint64_t> seed;
  std::optional<AlgebraParams> params;
};

/// Runs one command. Human-readable tables go to `log`, diagnostics to `err`,
/// artifacts (JSON, CSV, manifest.json) to options.out.
[[nodiscard]] int run(const RunOptions& options, std::ostream& log, std::ostream& err);

}  // namespace epcx::app
