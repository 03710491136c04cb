#ifndef HDPS_POSTSEL_HPP_
#define HDPS_POSTSEL_HPP_

#include <Eigen/Dense>
#include <vector>

#include "hdps/dataset.hpp"
#include "hdps/lasso.hpp"

namespace hdps {

// Strict-threshold support {j : |theta_hat_j| > tau}; indices sorted, 1-based.
struct SupportSet {
  std::vector<int> indices;
  double tau = 0.0;

  int size() const { return static_cast<int>(indices.size()); }
  bool contains(int j) const;
};

SupportSet select_support(const SparseEstimate& estimate, double tau);

// Midpoint of the admissible window (rn + eta, gamma - rn); throws RegimeError
// when the window is empty.
double default_tau(double rn, double eta, double gamma);

// Columns of M at the given 1-based indices, in order.
Eigen::MatrixXd select_columns(const Eigen::MatrixXd& M, const std::vector<int>& indices);

// n^{-1} Z_idx' Z_idx, exactly symmetric by construction. Empty indices give
// a 0x0 matrix.
Eigen::MatrixXd gram_submatrix(const Eigen::MatrixXd& Z, const std::vector<int>& indices);
Eigen::MatrixXd gram_submatrix(const Dataset& data, const std::vector<int>& indices);

struct PostFit {
  Eigen::VectorXd theta_tilde;  // length p, exactly zero off the support
  SupportSet support;
  Eigen::MatrixXd gram_sub;     // |T| x |T| empirical Gram on the support
  double sigma2_hat = 0.0;      // n^{-1} ||Y - Z theta_tilde||^2
  int n = 0;
  double cond_estimate = 0.0;   // spectral condition estimate of gram_sub
  bool ridged = false;          // ridge_guard was added to the normal equations
};

// Least squares restricted to the selected columns via the normal equations;
// coordinates off the support are exactly zero. An empty support yields
// theta_tilde = 0 and sigma2_hat = n^{-1} ||Y||^2. A Gram condition estimate
// above 1e12 throws NumericalError unless ridge_guard > 0, in which case
// ridge_guard * I is added and the fit is flagged.
PostFit fit_post_ols(const Eigen::MatrixXd& Z, const Eigen::VectorXd& Y,
                     const SupportSet& support, double ridge_guard = 0.0);
PostFit fit_post_ols(const Dataset& data, const SupportSet& support, double ridge_guard = 0.0);

// sqrt(n) * (theta_tilde - theta0), the error process at the canonical basis.
Eigen::VectorXd rescaled_error(const PostFit& fit, const CoefficientVector& truth);

}  // namespace hdps

#endif  // HDPS_POSTSEL_HPP_
