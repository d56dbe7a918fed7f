#ifndef PHOTOPLAN_VALIDATION_HPP
#define PHOTOPLAN_VALIDATION_HPP

#include <string>
#include <vector>

namespace photoplan {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  ///< measured numbers, for the report line
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

/// Closed-form spot checks of the two logistic utility curves.
SuiteResult validate_utility();

/// Analytic caster vs the fixed-step marching reference over randomized
/// sphere fields (tangency-adjacent configurations excluded by margin).
SuiteResult validate_raycast(int configs = 1000);

/// Interpolation fidelity: posterior-equals-data identity at zero noise and
/// RMSE of the sparse-ray visibility estimate against dense binary truth.
SuiteResult validate_gp();

/// Optimizer accuracy: mean distance between the swarm's viewpoint and the
/// exhaustive heatmap argmax over independent seeds.
SuiteResult validate_pso(int seeds = 20);

std::vector<std::string> validation_suites();

/// Runs one suite by name ("all" runs every suite concatenated). Throws
/// std::invalid_argument listing valid names when unknown.
std::vector<SuiteResult> run_validation(const std::string& name);

}  // namespace photoplan

#endif  // PHOTOPLAN_VALIDATION_HPP
