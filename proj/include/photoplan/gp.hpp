#ifndef PHOTOPLAN_GP_HPP
#define PHOTOPLAN_GP_HPP

#include <Eigen/Core>
#include <array>
#include <vector>

#include "photoplan/geometry.hpp"

namespace photoplan {

/// Squared-exponential Gaussian process hyperparameters. sigma_n is the
/// label noise standard deviation; 0 is allowed and yields exact
/// interpolation of the samples.
struct GPModel {
  double sigma_f = 1.0;  ///< signal amplitude, > 0
  double sigma_l = 2.0;  ///< length scale (meters), > 0
  double sigma_n = 0.1;  ///< label noise, >= 0

  void validate() const;
};

/// k(a, b) = sigma_f^2 exp(-|a - b|^2 / (2 sigma_l^2)), evaluated pairwise.
Eigen::MatrixXd rbf_kernel(const std::vector<Vec>& a,
                           const std::vector<Vec>& b, const GPModel& gp);

/// Posterior mean of the latent visibility field at query points X given
/// binary samples (Xs, Ys):
///   mu* = k(X, Xs) [k(Xs, Xs) + sigma_n^2 I]^{-1} Ys
/// clamped to [0, 1]. Empty Xs returns all zeros. Throws a numerical error
/// with a condition diagnostic when the symmetric solve fails.
Eigen::VectorXd posterior_mean(const std::vector<Vec>& x,
                               const std::vector<Vec>& xs,
                               const Eigen::VectorXd& ys, const GPModel& gp);

/// Symmetric positive-(semi)definite solve shared by the coverage paths:
/// returns [k(Xs,Xs) + sigma_n^2 I]^{-1} rhs.
Eigen::VectorXd gp_weights(const std::vector<Vec>& xs,
                           const Eigen::VectorXd& rhs, const GPModel& gp);

struct TuneResult {
  GPModel model;
  double nll = 0.0;
  /// Every evaluated (sigma_f, sigma_l, nll) triple, grid order.
  std::vector<std::array<double, 3>> table;
};

/// Grid search over (sigma_f, sigma_l) minimizing the Gaussian negative log
/// marginal likelihood of (Xs, Ys) at fixed sigma_n. Singular candidates are
/// skipped with a warning. Ties keep the earliest grid entry.
TuneResult tune_hyperparameters(const std::vector<Vec>& xs,
                                const Eigen::VectorXd& ys, double sigma_n,
                                const std::vector<double>& sigma_f_grid,
                                const std::vector<double>& sigma_l_grid);

}  // namespace photoplan

#endif  // PHOTOPLAN_GP_HPP
