#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "photoplan/gp.hpp"
#include "photoplan/rng.hpp"

using namespace photoplan;

TEST_CASE("kernel diagonal is the squared signal amplitude") {
  GPModel gp;
  gp.sigma_f = 1.3;
  gp.sigma_l = 2.0;
  std::vector<Vec> x = {Vec(1, 2, 0), Vec(-4, 0.5, 0)};
  Eigen::MatrixXd k = rbf_kernel(x, x, gp);
  CHECK(k(0, 0) == doctest::Approx(1.69).epsilon(1e-12));
  CHECK(k(1, 1) == doctest::Approx(1.69).epsilon(1e-12));
}

TEST_CASE("kernel at one length scale of separation") {
  GPModel gp;
  gp.sigma_f = 1.0;
  gp.sigma_l = 1.0;
  std::vector<Vec> a = {Vec(0, 0, 0)};
  std::vector<Vec> b = {Vec(1, 0, 0)};
  Eigen::MatrixXd k = rbf_kernel(a, b, gp);
  CHECK(k(0, 0) == doctest::Approx(0.6065306597126334).epsilon(1e-12));
}

TEST_CASE("kernel is symmetric under argument swap") {
  GPModel gp;
  Rng rng(5);
  std::vector<Vec> a, b;
  for (int i = 0; i < 7; ++i) a.emplace_back(rng.uniform(0, 10), rng.uniform(0, 10), 0);
  for (int i = 0; i < 4; ++i) b.emplace_back(rng.uniform(0, 10), rng.uniform(0, 10), 0);
  Eigen::MatrixXd kab = rbf_kernel(a, b, gp);
  Eigen::MatrixXd kba = rbf_kernel(b, a, gp);
  CHECK(kab.rows() == 7);
  CHECK(kab.cols() == 4);
  CHECK((kab - kba.transpose()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("noise-free posterior interpolates the samples exactly") {
  GPModel gp;
  gp.sigma_n = 0.0;
  Rng rng(11);
  std::vector<Vec> x;
  Eigen::VectorXd y(12);
  for (int i = 0; i < 12; ++i) {
    x.emplace_back(rng.uniform(0, 30), rng.uniform(0, 30), 0);
    y[i] = rng.uniform01() < 0.5 ? 0.0 : 1.0;
  }
  Eigen::VectorXd mu = posterior_mean(x, x, y, gp);
  REQUIRE(mu.size() == y.size());
  CHECK((mu - y).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("empty sample set yields zero belief") {
  GPModel gp;
  std::vector<Vec> x = {Vec(0, 0, 0), Vec(5, 5, 0)};
  Eigen::VectorXd mu = posterior_mean(x, {}, Eigen::VectorXd(), gp);
  REQUIRE(mu.size() == 2);
  CHECK(mu.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("single positive sample decays by the kernel profile") {
  GPModel gp;
  gp.sigma_f = 1.0;
  gp.sigma_l = 3.0;
  gp.sigma_n = 0.0;
  std::vector<Vec> xs = {Vec(0, 0, 0)};
  Eigen::VectorXd ys(1);
  ys << 1.0;
  // Query exactly one length scale away: k(q, s)/k(s, s) = e^{-1/2}.
  std::vector<Vec> query = {Vec(3.0, 0, 0), Vec(0, 0, 0)};
  Eigen::VectorXd mu = posterior_mean(query, xs, ys, gp);
  CHECK(mu[0] == doctest::Approx(0.6065306597126334).epsilon(1e-10));
  CHECK(mu[1] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("solver path agrees with the direct matrix inverse") {
  GPModel gp;
  gp.sigma_l = 2.5;
  gp.sigma_n = 0.1;
  Rng rng(23);
  const int n = 200;
  std::vector<Vec> xs;
  Eigen::VectorXd ys(n);
  for (int i = 0; i < n; ++i) {
    xs.emplace_back(rng.uniform(0, 60), rng.uniform(0, 60), 0);
    ys[i] = rng.uniform01() < 0.5 ? 0.0 : 1.0;
  }
  std::vector<Vec> query;
  for (int i = 0; i < 40; ++i) {
    query.emplace_back(rng.uniform(0, 60), rng.uniform(0, 60), 0);
  }

  Eigen::VectorXd mu = posterior_mean(query, xs, ys, gp);

  Eigen::MatrixXd kss = rbf_kernel(xs, xs, gp);
  kss.diagonal().array() += gp.sigma_n * gp.sigma_n;
  Eigen::VectorXd direct =
      rbf_kernel(query, xs, gp) * kss.inverse() * ys;
  for (int i = 0; i < direct.size(); ++i) {
    direct[i] = clamp01(direct[i]);
  }
  CHECK((mu - direct).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("posterior outputs are clamped to the belief range") {
  GPModel gp;
  gp.sigma_n = 0.0;
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vec> xs;
    Eigen::VectorXd ys(6);
    for (int i = 0; i < 6; ++i) {
      xs.emplace_back(rng.uniform(0, 4), rng.uniform(0, 4), 0);
      ys[i] = rng.uniform01() < 0.5 ? 0.0 : 1.0;
    }
    std::vector<Vec> query;
    for (int i = 0; i < 50; ++i) {
      query.emplace_back(rng.uniform(-2, 6), rng.uniform(-2, 6), 0);
    }
    Eigen::VectorXd mu = posterior_mean(query, xs, ys, gp);
    CHECK(mu.minCoeff() >= 0.0);
    CHECK(mu.maxCoeff() <= 1.0);
  }
}

TEST_CASE("solve weights satisfy the linear system") {
  GPModel gp;
  gp.sigma_n = 0.2;
  Rng rng(41);
  std::vector<Vec> xs;
  Eigen::VectorXd rhs(30);
  for (int i = 0; i < 30; ++i) {
    xs.emplace_back(rng.uniform(0, 20), rng.uniform(0, 20), 0);
    rhs[i] = rng.uniform(-1, 1);
  }
  Eigen::VectorXd w = gp_weights(xs, rhs, gp);
  Eigen::MatrixXd kss = rbf_kernel(xs, xs, gp);
  kss.diagonal().array() += gp.sigma_n * gp.sigma_n;
  CHECK((kss * w - rhs).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("hyperparameter validation rejects non-positive scales") {
  GPModel bad;
  bad.sigma_f = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = GPModel{};
  bad.sigma_l = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = GPModel{};
  bad.sigma_n = -0.1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  GPModel ok;
  ok.sigma_n = 0.0;  // exact interpolation is allowed
  CHECK_NOTHROW(ok.validate());
}

TEST_CASE("grid search returns the minimum-NLL grid member") {
  Rng rng(77);
  std::vector<Vec> xs;
  Eigen::VectorXd ys(40);
  for (int i = 0; i < 40; ++i) {
    Vec p(rng.uniform(0, 30), rng.uniform(0, 30), 0);
    xs.push_back(p);
    // Smooth synthetic labels: visible on the left half.
    ys[i] = p.x() < 15.0 ? 1.0 : 0.0;
  }
  std::vector<double> f_grid = {0.5, 1.0};
  std::vector<double> l_grid = {0.5, 2.0, 8.0};
  TuneResult result = tune_hyperparameters(xs, ys, 0.1, f_grid, l_grid);

  bool f_member = result.model.sigma_f == 0.5 || result.model.sigma_f == 1.0;
  bool l_member = result.model.sigma_l == 0.5 ||
                  result.model.sigma_l == 2.0 || result.model.sigma_l == 8.0;
  CHECK(f_member);
  CHECK(l_member);

  REQUIRE(result.table.size() == 6);
  double table_min = result.table[0][2];
  for (const auto& row : result.table) table_min = std::min(table_min, row[2]);
  CHECK(result.nll == doctest::Approx(table_min));
  CHECK(result.nll <= result.table[0][2]);
}

TEST_CASE("single-element grid is returned as-is") {
  std::vector<Vec> xs = {Vec(0, 0, 0), Vec(1, 0, 0), Vec(2, 0, 0)};
  Eigen::VectorXd ys(3);
  ys << 1.0, 0.0, 1.0;
  TuneResult result = tune_hyperparameters(xs, ys, 0.1, {0.7}, {1.5});
  CHECK(result.model.sigma_f == 0.7);
  CHECK(result.model.sigma_l == 1.5);
  CHECK(result.table.size() == 1);
}
