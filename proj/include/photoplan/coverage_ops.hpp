#ifndef PHOTOPLAN_COVERAGE_OPS_HPP
#define PHOTOPLAN_COVERAGE_OPS_HPP

#include <vector>

#include "photoplan/gp.hpp"
#include "photoplan/raycast.hpp"
#include "photoplan/target.hpp"

namespace photoplan {

/// Coordinate-count cap for the GP solves; larger sample sets are stride
/// subsampled (deterministically) before solving.
inline constexpr int kDefaultSampleCap = 1500;

/// One ray terminal turned into a GP training sample. `prior` is the current
/// capture belief at the sample location: the winning coordinate's mu for
/// target hits, 0 elsewhere.
struct CoverageSample {
  Vec x = Vec::Zero();
  double y = 0.0;
  double prior = 0.0;
};

/// Extracts the GP-relevant samples from a cast bundle. Target hits become
/// (terminal, 1); other rays become (terminal, 0) but are kept only when the
/// terminal lies within 4 sigma_l of the target box, where their kernel
/// columns are non-negligible. This keeps candidate solves at the bundle
/// scale without changing the posterior materially.
std::vector<CoverageSample> collect_samples(const std::vector<RaycastHit>& hits,
                                            const TargetModel& target,
                                            const CoverageField& field,
                                            const GPModel& gp);

/// Per-coordinate visibility belief after fusing these hits, WITHOUT
/// mutating the field. The current belief acts as a mean-function offset, so
/// the solve runs on residuals y - prior:
///   est_j = mu_j + clamp(k(X, Xs) alpha, 0, 1 - mu_j)
/// Rays that saw nothing near the target leave the belief unchanged.
Eigen::VectorXd estimate_visibility(const CoverageField& field,
                                    const TargetModel& target,
                                    const std::vector<RaycastHit>& hits,
                                    const GPModel& gp,
                                    int sample_cap = kDefaultSampleCap);

/// Expected coverage gain of committing these hits: sum over coordinates of
/// estimate_visibility minus the current belief.
double expected_gain(const CoverageField& field, const TargetModel& target,
                     const std::vector<RaycastHit>& hits, const GPModel& gp,
                     int sample_cap = kDefaultSampleCap);

/// Commits a capture: appends the hits' samples to the field, recomputes the
/// full posterior over every committed sample, and raises mu monotonically:
///   mu <- clamp01(max(mu, mu*_full)).
void commit_capture(CoverageField& field, const TargetModel& target,
                    const std::vector<RaycastHit>& hits, const GPModel& gp,
                    int sample_cap = kDefaultSampleCap);

/// Deterministic stride subsample keeping at most `cap` of `n` indices.
std::vector<int> stride_subsample(int n, int cap);

}  // namespace photoplan

#endif  // PHOTOPLAN_COVERAGE_OPS_HPP
