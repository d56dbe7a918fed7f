#include "photoplan/gp.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "photoplan/log.hpp"

namespace photoplan {

namespace {

constexpr double kLog2Pi = 1.8378770664093455;

Eigen::MatrixXd regularized_gram(const std::vector<Vec>& xs,
                                 const GPModel& gp) {
  Eigen::MatrixXd k = rbf_kernel(xs, xs, gp);
  k.diagonal().array() += gp.sigma_n * gp.sigma_n;
  return k;
}

[[noreturn]] void throw_solver_failure(const Eigen::MatrixXd& k) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(k,
                                                     Eigen::EigenvaluesOnly);
  std::ostringstream msg;
  msg << "gp: symmetric solve failed; eigenvalue range ["
      << eig.eigenvalues().minCoeff() << ", " << eig.eigenvalues().maxCoeff()
      << "], n = " << k.rows();
  throw std::runtime_error(msg.str());
}

}  // namespace

void GPModel::validate() const {
  if (!(sigma_f > 0.0) || !(sigma_l > 0.0)) {
    throw std::invalid_argument("gp: sigma_f and sigma_l must be positive");
  }
  if (sigma_n < 0.0) {
    throw std::invalid_argument("gp: sigma_n must be >= 0");
  }
}

Eigen::MatrixXd rbf_kernel(const std::vector<Vec>& a,
                           const std::vector<Vec>& b, const GPModel& gp) {
  gp.validate();
  const double sf2 = gp.sigma_f * gp.sigma_f;
  const double inv = 1.0 / (2.0 * gp.sigma_l * gp.sigma_l);
  Eigen::MatrixXd k(a.size(), b.size());
  for (std::size_t j = 0; j < b.size(); ++j) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      k(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          sf2 * std::exp(-(a[i] - b[j]).squaredNorm() * inv);
    }
  }
  return k;
}

Eigen::VectorXd gp_weights(const std::vector<Vec>& xs,
                           const Eigen::VectorXd& rhs, const GPModel& gp) {
  gp.validate();
  if (static_cast<Eigen::Index>(xs.size()) != rhs.size()) {
    throw std::invalid_argument("gp: sample/label size mismatch");
  }
  if (xs.empty()) return Eigen::VectorXd();

  const Eigen::MatrixXd k = regularized_gram(xs, gp);
  Eigen::LLT<Eigen::MatrixXd> llt(k);
  if (llt.info() == Eigen::Success) {
    return llt.solve(rhs);
  }
  // LDLT tolerates the semidefinite case (duplicate samples, sigma_n = 0).
  Eigen::LDLT<Eigen::MatrixXd> ldlt(k);
  if (ldlt.info() == Eigen::Success && ldlt.isPositive()) {
    return ldlt.solve(rhs);
  }
  throw_solver_failure(k);
}

Eigen::VectorXd posterior_mean(const std::vector<Vec>& x,
                               const std::vector<Vec>& xs,
                               const Eigen::VectorXd& ys, const GPModel& gp) {
  if (xs.empty()) {
    return Eigen::VectorXd::Zero(static_cast<Eigen::Index>(x.size()));
  }
  const Eigen::VectorXd alpha = gp_weights(xs, ys, gp);
  Eigen::VectorXd mu = rbf_kernel(x, xs, gp) * alpha;
  for (Eigen::Index j = 0; j < mu.size(); ++j) mu[j] = clamp01(mu[j]);
  return mu;
}

TuneResult tune_hyperparameters(const std::vector<Vec>& xs,
                                const Eigen::VectorXd& ys, double sigma_n,
                                const std::vector<double>& sigma_f_grid,
                                const std::vector<double>& sigma_l_grid) {
  if (xs.empty()) {
    throw std::invalid_argument("tune: needs at least one sample");
  }
  if (sigma_f_grid.empty() || sigma_l_grid.empty()) {
    throw std::invalid_argument("tune: candidate grids must be non-empty");
  }

  TuneResult result;
  bool found = false;
  const double n = static_cast<double>(xs.size());
  for (double sf : sigma_f_grid) {
    for (double sl : sigma_l_grid) {
      GPModel gp{sf, sl, sigma_n};
      gp.validate();
      const Eigen::MatrixXd k = regularized_gram(xs, gp);
      Eigen::LLT<Eigen::MatrixXd> llt(k);
      if (llt.info() != Eigen::Success) {
        log_info("tune: skipping singular candidate sigma_f=%g sigma_l=%g",
                 sf, sl);
        continue;
      }
      const Eigen::VectorXd alpha = llt.solve(ys);
      double logdet = 0.0;
      for (Eigen::Index i = 0; i < k.rows(); ++i) {
        logdet += 2.0 * std::log(llt.matrixL()(i, i));
      }
      const double nll =
          0.5 * ys.dot(alpha) + 0.5 * logdet + 0.5 * n * kLog2Pi;
      result.table.push_back({sf, sl, nll});
      if (!found || nll < result.nll) {
        found = true;
        result.nll = nll;
        result.model = gp;
      }
    }
  }
  if (!found) {
    throw std::runtime_error("tune: every candidate kernel was singular");
  }
  return result;
}

}  // namespace photoplan
