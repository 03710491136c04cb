#ifndef HDPS_DATASET_HPP_
#define HDPS_DATASET_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>

#include "hdps/coefficients.hpp"
#include "hdps/design.hpp"

namespace hdps {

struct Dataset {
  Eigen::MatrixXd Z;      // n x p design
  Eigen::VectorXd Y;      // n responses, Y = Z * theta0 + noise
  Eigen::VectorXd noise;  // stored so the reconstruction identity is exact
  CoefficientVector truth;
  DesignSpec design;
  std::uint64_t seed = 0;

  int n() const { return static_cast<int>(Z.rows()); }
  int p() const { return static_cast<int>(Z.cols()); }

  // max_i |Y_i - (Z theta0 + noise)_i| with the signal re-evaluated through
  // the same expression used at generation time; exactly zero by construction.
  double reconstruction_error() const;
};

// Rows of Z i.i.d. from the covariate law, noise i.i.d. with variance sigma2,
// Z independent of noise. Identical (design, truth, seed) give bit-identical
// datasets within a build.
Dataset sample_dataset(const DesignSpec& design, const CoefficientVector& truth,
                       std::uint64_t seed);

// CSV dump: header z1,...,zp,y with the response as the final column.
void write_dataset_csv(const Dataset& data, const std::filesystem::path& path);

// Raw design/response pair as loaded back from CSV (no generation metadata).
struct LoadedData {
  Eigen::MatrixXd Z;
  Eigen::VectorXd Y;
};
LoadedData read_dataset_csv(const std::filesystem::path& path);

}  // namespace hdps

#endif  // HDPS_DATASET_HPP_
