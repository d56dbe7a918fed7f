#include "photoplan/coverage_ops.hpp"

#include <stdexcept>

namespace photoplan {

std::vector<int> stride_subsample(int n, int cap) {
  std::vector<int> idx;
  if (cap <= 0) throw std::invalid_argument("sample cap must be positive");
  if (n <= cap) {
    idx.resize(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    return idx;
  }
  idx.resize(cap);
  for (int i = 0; i < cap; ++i) {
    idx[i] = static_cast<int>((static_cast<long long>(i) * n) / cap);
  }
  return idx;
}

std::vector<CoverageSample> collect_samples(const std::vector<RaycastHit>& hits,
                                            const TargetModel& target,
                                            const CoverageField& field,
                                            const GPModel& gp) {
  if (field.mu.size() != static_cast<Eigen::Index>(target.coords().size())) {
    throw std::invalid_argument("coverage: field size mismatch");
  }
  const Box aabb = target.aabb();
  const double reach = 4.0 * gp.sigma_l;
  std::vector<CoverageSample> samples;
  samples.reserve(hits.size());
  for (const auto& hit : hits) {
    CoverageSample s;
    s.x = hit.terminal;
    if (hit.kind == HitKind::kTarget) {
      s.y = 1.0;
      s.prior = field.mu[hit.target_index];
    } else {
      if (aabb.distance(hit.terminal, target.dims()) > reach) continue;
      s.y = 0.0;
      s.prior = 0.0;
    }
    samples.push_back(s);
  }
  return samples;
}

Eigen::VectorXd estimate_visibility(const CoverageField& field,
                                    const TargetModel& target,
                                    const std::vector<RaycastHit>& hits,
                                    const GPModel& gp, int sample_cap) {
  auto samples = collect_samples(hits, target, field, gp);
  if (samples.empty()) return field.mu;

  const auto keep = stride_subsample(static_cast<int>(samples.size()),
                                     sample_cap);
  std::vector<Vec> xs(keep.size());
  Eigen::VectorXd residual(static_cast<Eigen::Index>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    xs[i] = samples[keep[i]].x;
    residual[static_cast<Eigen::Index>(i)] =
        samples[keep[i]].y - samples[keep[i]].prior;
  }

  const Eigen::VectorXd alpha = gp_weights(xs, residual, gp);
  const Eigen::VectorXd raw = rbf_kernel(target.coords(), xs, gp) * alpha;
  Eigen::VectorXd est = field.mu;
  for (Eigen::Index j = 0; j < raw.size(); ++j) {
    const double headroom = 1.0 - field.mu[j];
    const double g = raw[j];
    est[j] += g <= 0.0 ? 0.0 : (g > headroom ? headroom : g);
  }
  return est;
}

double expected_gain(const CoverageField& field, const TargetModel& target,
                     const std::vector<RaycastHit>& hits, const GPModel& gp,
                     int sample_cap) {
  const Eigen::VectorXd est =
      estimate_visibility(field, target, hits, gp, sample_cap);
  return (est - field.mu).sum();
}

void commit_capture(CoverageField& field, const TargetModel& target,
                    const std::vector<RaycastHit>& hits, const GPModel& gp,
                    int sample_cap) {
  const auto samples = collect_samples(hits, target, field, gp);
  for (const auto& s : samples) {
    field.sample_x.push_back(s.x);
    field.sample_y.push_back(s.y);
  }
  if (field.sample_x.empty()) return;

  const auto keep = stride_subsample(static_cast<int>(field.sample_x.size()),
                                     sample_cap);
  std::vector<Vec> xs(keep.size());
  Eigen::VectorXd ys(static_cast<Eigen::Index>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    xs[i] = field.sample_x[keep[i]];
    ys[static_cast<Eigen::Index>(i)] = field.sample_y[keep[i]];
  }
  const Eigen::VectorXd mu_full = posterior_mean(target.coords(), xs, ys, gp);
  for (Eigen::Index j = 0; j < field.mu.size(); ++j) {
    field.mu[j] = clamp01(std::max(field.mu[j], mu_full[j]));
  }
}

}  // namespace photoplan
