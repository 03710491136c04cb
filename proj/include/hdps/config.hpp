#ifndef HDPS_CONFIG_HPP_
#define HDPS_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hdps/coefficients.hpp"
#include "hdps/design.hpp"
#include "hdps/lintest.hpp"

namespace hdps {

// Hypothesis block before resolution against the generated truth. When b is
// absent it resolves to A theta0 + b_offset * q^{-1/2} * 1, so b_offset is the
// Euclidean distance of b from the null value.
struct HypothesisSpec {
  Eigen::MatrixXd A;
  std::optional<Eigen::VectorXd> b;
  double b_offset = 0.0;
};

struct ProjectionVector {
  std::string label;
  Eigen::VectorXd u;  // unit l2 norm
};

struct ExperimentConfig {
  DesignSpec design;
  CoefficientSpec coefficients;
  std::optional<HypothesisSpec> hypothesis;
  int replications = 1;
  double alpha = 0.05;
  double lambda_c = 1.0;
  double rn_c = 1.0;
  std::optional<double> tau;  // nullopt = auto (window midpoint)
  std::int64_t mc_draws = kDefaultMcDraws;
  std::uint64_t master_seed = 0;
  // Empty means the defaults: canonical basis vectors on the strong set plus
  // one dense unit vector over the first min(p, 50) coordinates.
  std::vector<ProjectionVector> projection_vectors;
  double ridge_guard = 0.0;
  double rank_tol = kDefaultRankTol;
  double lasso_tol = 1e-10;
  int lasso_max_iter = 1000;

  void validate() const;  // throws ConfigError
};

ExperimentConfig parse_experiment_config(const nlohmann::json& j);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);
nlohmann::json experiment_config_to_json(const ExperimentConfig& config);

// The datagen subset of the config (n, p, laws, sigma2, strong, weak_count,
// eta, gamma, seed) used by the one-shot generator.
std::pair<DesignSpec, CoefficientSpec> parse_datagen_config(const nlohmann::json& j);

Hypothesis parse_hypothesis_json(const nlohmann::json& j, int p);  // requires explicit b

}  // namespace hdps

#endif  // HDPS_CONFIG_HPP_
