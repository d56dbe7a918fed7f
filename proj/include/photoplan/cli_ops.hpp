#ifndef PHOTOPLAN_CLI_OPS_HPP
#define PHOTOPLAN_CLI_OPS_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace photoplan {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;   ///< ran, but a criterion failed
inline constexpr int kExitBadInput = 2;  ///< unusable arguments or file

struct RunOptions {
  std::string scenario_path;
  std::string out_dir = "out";
  std::optional<std::uint64_t> seed;  ///< overrides the scenario's seed
};

struct HeatmapOptions {
  std::string scenario_path;
  std::string out_file = "heatmap.csv";
  double step = 1.0;
};

struct TuneGpOptions {
  std::string scenario_path;
  std::string out_file;  ///< empty = print only
};

/// Full mission: writes the log files into out_dir/<scenario name>/ and
/// prints a one-paragraph summary.
int cmd_run(const RunOptions& opts);

/// Exhaustive ground-truth score table; prints the argmax.
int cmd_heatmap(const HeatmapOptions& opts);

/// Runs one validation suite (or "all"); one PASS/FAIL line per check.
int cmd_validate(const std::string& suite);

/// Grid-searches kernel hyperparameters on samples gathered from a dense
/// capture at the scenario's best heatmap cell; prints the NLL table.
int cmd_tune_gp(const TuneGpOptions& opts);

}  // namespace photoplan

#endif  // PHOTOPLAN_CLI_OPS_HPP
