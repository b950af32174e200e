#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gnls {

enum class Command { Solve, Maximize, Sweep, Limits, Truncate, CheckConditions, Eigen };

struct ExperimentConfig {
  Command command = Command::Solve;

  // Exactly one graph source.
  std::optional<std::string> graph_file;
  std::optional<std::string> fixture;
  std::optional<std::string> lattice;  // "1d" or "2d"
  int radius = 16;
  std::vector<int> radii;              // truncate only

  double p = 3.0;
  std::optional<double> mass;
  std::optional<double> mass_from;
  std::optional<double> mass_to;
  int mass_points = 20;

  std::optional<std::string> potential;       // "a+b*rho^g"
  std::optional<std::string> potential_file;  // JSON object id -> h
  std::optional<std::string> origin;

  double tolerance = 1e-10;
  long max_iterations = 1'000'000;
  int restarts = 8;
  std::uint64_t seed = 0;
  std::string out_dir = "gnls-out";

  /// Original argument list, recorded in the manifest.
  std::vector<std::string> argv;
};

/// Exit codes of `run_cli`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitNotConverged = 3;
inline constexpr int kExitIo = 4;

/// Thrown by `parse_config` for --help; carries the usage text.
struct HelpRequested {
  std::string text;
};

/// Parses arguments (without the program name). Throws ConfigParse, HelpRequested.
ExperimentConfig parse_config(const std::vector<std::string>& args);

/// Runs one experiment, writing artifacts and manifest.json into
/// `cfg.out_dir` and a short report to `out`. Returns kExitNotConverged when
/// a sweep finished with failed records, kExitOk otherwise. Module errors propagate.
int run(const ExperimentConfig& cfg, std::ostream& out);

/// parse_config + run with errors mapped to exit codes and reported on `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gnls
