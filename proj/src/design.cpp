#include "hdps/design.hpp"

#include <cmath>
#include <cstdlib>

#include "hdps/errors.hpp"

namespace hdps {

std::string to_string(CovariateLaw law) {
  switch (law) {
    case CovariateLaw::GaussianIdentity: return "gaussian-identity";
    case CovariateLaw::GaussianToeplitz: return "gaussian-toeplitz";
    case CovariateLaw::Rademacher: return "rademacher";
    case CovariateLaw::UniformScaled: return "uniform-scaled";
  }
  std::abort();
}

std::string to_string(NoiseLaw law) {
  switch (law) {
    case NoiseLaw::Gaussian: return "gaussian";
    case NoiseLaw::RademacherScaled: return "rademacher-scaled";
    case NoiseLaw::UniformScaled: return "uniform-scaled";
  }
  std::abort();
}

CovariateLaw covariate_law_from_string(const std::string& name) {
  if (name == "gaussian-identity") return CovariateLaw::GaussianIdentity;
  if (name == "gaussian-toeplitz") return CovariateLaw::GaussianToeplitz;
  if (name == "rademacher") return CovariateLaw::Rademacher;
  if (name == "uniform-scaled") return CovariateLaw::UniformScaled;
  throw ConfigError("unknown covariate law: " + name);
}

NoiseLaw noise_law_from_string(const std::string& name) {
  if (name == "gaussian") return NoiseLaw::Gaussian;
  if (name == "rademacher-scaled") return NoiseLaw::RademacherScaled;
  if (name == "uniform-scaled") return NoiseLaw::UniformScaled;
  throw ConfigError("unknown noise law: " + name);
}

void DesignSpec::validate() const {
  if (n < 1) throw ConfigError("design spec: n must be positive");
  if (p < 1) throw ConfigError("design spec: p must be positive");
  if (sigma2 <= 0.0) throw ConfigError("design spec: sigma2 must be positive");
  if (covariate_law == CovariateLaw::GaussianToeplitz &&
      (rho <= -1.0 || rho >= 1.0))
    throw ConfigError("design spec: toeplitz rho must lie in (-1, 1)");
}

Eigen::MatrixXd population_gram(const DesignSpec& design, const std::vector<int>& indices) {
  const auto k = static_cast<Eigen::Index>(indices.size());
  for (int j : indices)
    if (j < 1 || j > design.p) throw ConfigError("population_gram: index outside [1, p]");

  if (design.covariate_law == CovariateLaw::GaussianToeplitz) {
    Eigen::MatrixXd J(k, k);
    for (Eigen::Index a = 0; a < k; ++a)
      for (Eigen::Index b = 0; b < k; ++b)
        J(a, b) = std::pow(design.rho, std::abs(indices[a] - indices[b]));
    return J;
  }
  return Eigen::MatrixXd::Identity(k, k);
}

}  // namespace hdps
