#ifndef HDPS_DESIGN_HPP_
#define HDPS_DESIGN_HPP_

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace hdps {

// All covariate laws are mean-zero with unit-variance coordinates and a
// closed-form population Gram matrix; all are bounded or Gaussian.
enum class CovariateLaw { GaussianIdentity, GaussianToeplitz, Rademacher, UniformScaled };
enum class NoiseLaw { Gaussian, RademacherScaled, UniformScaled };

std::string to_string(CovariateLaw law);
std::string to_string(NoiseLaw law);
CovariateLaw covariate_law_from_string(const std::string& name);
NoiseLaw noise_law_from_string(const std::string& name);

struct DesignSpec {
  int n = 0;
  int p = 0;
  CovariateLaw covariate_law = CovariateLaw::GaussianIdentity;
  double rho = 0.0;  // Toeplitz correlation, used only by GaussianToeplitz
  NoiseLaw noise_law = NoiseLaw::Gaussian;
  double sigma2 = 1.0;

  void validate() const;  // throws ConfigError
};

// Population Gram submatrix J_{idx,idx} in closed form (identity for the
// three isotropic laws, rho^{|i-j|} for the Toeplitz law). Indices 1-based.
Eigen::MatrixXd population_gram(const DesignSpec& design, const std::vector<int>& indices);

}  // namespace hdps

#endif  // HDPS_DESIGN_HPP_
