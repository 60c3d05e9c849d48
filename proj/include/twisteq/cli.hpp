#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "twisteq/config.hpp"

namespace twisteq::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailure = 1;
inline constexpr int kInputError = 2;

struct CommonOptions {
  std::optional<std::filesystem::path> config;
  std::optional<std::filesystem::path> out;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::optional<int> truncation;
  std::optional<int> threads;
};

// Loads the config (defaults when absent) and applies flag overrides.
RunConfig resolve_config(const CommonOptions& opts);

int cmd_solve(const RunConfig& cfg, const std::filesystem::path& g_file,
              std::optional<double> m_flag, std::optional<int> one_sided_mode,
              std::ostream& log);
int cmd_verify_bounds(const RunConfig& cfg, std::ostream& log);
int cmd_verify_distributions(const RunConfig& cfg, std::ostream& log);
int cmd_sweep(const RunConfig& cfg, std::ostream& log);
int cmd_report(const std::filesystem::path& dir, std::ostream& log);

}  // namespace twisteq::cli
