#ifndef HDPS_COEFFICIENTS_HPP_
#define HDPS_COEFFICIENTS_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

namespace hdps {

// True coefficient layout: a fixed set of strong entries with magnitude in
// (gamma, theta_max], plus weak_count seeded entries of magnitude eta.
// Indices are 1-based everywhere in the public API (configs, supports,
// reports); conversion to 0-based happens only at matrix access points.
struct CoefficientSpec {
  std::vector<std::pair<int, double>> strong_entries;  // (index, value)
  int weak_count = 0;
  double eta = 0.0;        // weak magnitude; must satisfy eta < gamma
  double gamma = 0.0;      // strong/weak separation threshold, > 0
  double theta_max = 0.0;  // 0 means "default to max strong magnitude"
  int p = 0;

  int s0() const { return static_cast<int>(strong_entries.size()) + weak_count; }

  // Throws ConfigError on any invariant violation.
  void validate() const;
};

// Dense realization of a CoefficientSpec together with its index sets.
struct CoefficientVector {
  Eigen::VectorXd theta;
  std::vector<int> strong_set;  // sorted, 1-based
  std::vector<int> weak_set;    // sorted, 1-based, disjoint from strong_set
  double gamma = 0.0;
  double eta = 0.0;
  double theta_max = 0.0;

  int p() const { return static_cast<int>(theta.size()); }
  std::vector<int> support() const;  // strong + weak, sorted
};

// Places strong entries as specified and weak entries of magnitude eta at
// indices drawn uniformly without replacement from the complement of the
// strong set; placement and signs are functions of (spec, seed) only.
CoefficientVector make_coefficients(const CoefficientSpec& spec, std::uint64_t seed);

}  // namespace hdps

#endif  // HDPS_COEFFICIENTS_HPP_
