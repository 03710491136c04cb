#ifndef HDPS_LASSO_HPP_
#define HDPS_LASSO_HPP_

#include <Eigen/Dense>
#include <optional>

#include "hdps/dataset.hpp"

namespace hdps {

struct SparseEstimate {
  Eigen::VectorXd theta_hat;
  double lambda = 0.0;
  int iterations = 0;              // completed coordinate sweeps
  double max_kkt_violation = 0.0;  // stationarity residual at exit
  bool converged = false;
};

struct LassoOptions {
  double tol = 1e-10;  // max KKT violation accepted as converged
  int max_iter = 1000; // sweep budget
  std::optional<Eigen::VectorXd> init;  // warm start
};

// sign(x) * max(|x| - t, 0)
double soft_threshold(double x, double t);

// Universal-penalty convention c * sigma * sqrt(2 log p / n); at p = 1 the
// log term is floored to give c * sigma / sqrt(n).
double default_lambda(int n, int p, double sigma, double c = 1.0);

// Penalized least squares (2n)^{-1} ||Y - Z theta||^2 + lambda ||theta||_1 by
// cyclic coordinate descent on unstandardized columns. Convergence is measured
// by the max KKT violation; hitting max_iter returns converged = false with
// diagnostics rather than throwing.
SparseEstimate fit_lasso(const Eigen::MatrixXd& Z, const Eigen::VectorXd& Y,
                         double lambda, const LassoOptions& opts = {});
SparseEstimate fit_lasso(const Dataset& data, double lambda, const LassoOptions& opts = {});

// (2n)^{-1} ||Y - Z theta||^2 + lambda ||theta||_1, the objective fit_lasso minimizes.
double lasso_objective(const Eigen::MatrixXd& Z, const Eigen::VectorXd& Y,
                       const Eigen::VectorXd& theta, double lambda);

// Stationarity residual of the penalized objective at theta: for inactive
// coordinates the excess of |n^{-1} Z_j'(Y - Z theta)| over lambda, for active
// ones the distance of that correlation from lambda * sign(theta_j).
double max_kkt_violation(const Eigen::MatrixXd& Z, const Eigen::VectorXd& Y,
                         const Eigen::VectorXd& theta, double lambda);

}  // namespace hdps

#endif  // HDPS_LASSO_HPP_
