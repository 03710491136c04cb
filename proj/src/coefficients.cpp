#include "hdps/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "hdps/errors.hpp"
#include "hdps/rng.hpp"

namespace hdps {

void CoefficientSpec::validate() const {
  if (p < 1) throw ConfigError("coefficient spec: p must be positive");
  if (gamma <= 0.0) throw ConfigError("coefficient spec: gamma must be positive");
  if (weak_count < 0) throw ConfigError("coefficient spec: weak_count must be nonnegative");
  if (eta < 0.0) throw ConfigError("coefficient spec: eta must be nonnegative");
  if (eta >= gamma) throw ConfigError("coefficient spec: eta must be smaller than gamma");
  if (weak_count > 0 && eta <= 0.0)
    throw ConfigError("coefficient spec: eta must be positive when weak_count > 0");
  if (s0() > p) throw ConfigError("coefficient spec: s0 exceeds p");

  const double tmax = theta_max > 0.0 ? theta_max
                                      : [&] {
                                          double m = 0.0;
                                          for (const auto& [j, v] : strong_entries)
                                            m = std::max(m, std::abs(v));
                                          return m;
                                        }();
  std::set<int> seen;
  for (const auto& [j, v] : strong_entries) {
    if (j < 1 || j > p)
      throw ConfigError("coefficient spec: strong index " + std::to_string(j) +
                        " outside [1, p]");
    if (!seen.insert(j).second)
      throw ConfigError("coefficient spec: duplicate strong index " + std::to_string(j));
    if (std::abs(v) <= gamma)
      throw ConfigError("coefficient spec: strong value at index " + std::to_string(j) +
                        " has magnitude <= gamma");
    if (std::abs(v) > tmax)
      throw ConfigError("coefficient spec: strong value at index " + std::to_string(j) +
                        " exceeds theta_max");
  }
}

std::vector<int> CoefficientVector::support() const {
  std::vector<int> all(strong_set);
  all.insert(all.end(), weak_set.begin(), weak_set.end());
  std::sort(all.begin(), all.end());
  return all;
}

CoefficientVector make_coefficients(const CoefficientSpec& spec, std::uint64_t seed) {
  spec.validate();

  CoefficientVector out;
  out.theta = Eigen::VectorXd::Zero(spec.p);
  out.gamma = spec.gamma;
  out.eta = spec.eta;
  out.theta_max = spec.theta_max;
  if (out.theta_max <= 0.0) {
    for (const auto& [j, v] : spec.strong_entries)
      out.theta_max = std::max(out.theta_max, std::abs(v));
  }

  std::set<int> strong;
  for (const auto& [j, v] : spec.strong_entries) {
    out.theta(j - 1) = v;
    strong.insert(j);
  }
  out.strong_set.assign(strong.begin(), strong.end());

  if (spec.weak_count > 0) {
    std::vector<int> candidates;
    candidates.reserve(spec.p - strong.size());
    for (int j = 1; j <= spec.p; ++j)
      if (!strong.count(j)) candidates.push_back(j);

    auto eng = rng::engine(seed, rng::kCoefficientStream);
    std::vector<int> chosen;
    std::sample(candidates.begin(), candidates.end(), std::back_inserter(chosen),
                static_cast<size_t>(spec.weak_count), eng);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int j : chosen) out.theta(j - 1) = coin(eng) ? spec.eta : -spec.eta;
    out.weak_set = std::move(chosen);  // std::sample preserves the sorted order
  }
  return out;
}

}  // namespace hdps
