#ifndef HDPS_REGIME_HPP_
#define HDPS_REGIME_HPP_

#include "hdps/coefficients.hpp"
#include "hdps/design.hpp"

namespace hdps {

// First-stage sup-norm rate proxy c * sqrt(log p / n); log 1 = 0 gives 0 at p = 1.
double rn_proxy(int n, int p, double c = 1.0);

// Diagnostic report for the admissible threshold window and the strong-block
// Gram floor. Carries booleans instead of throwing.
struct RegimeReport {
  double n_s0_eta2 = 0.0;        // n * s0 * eta^2
  double window_lo = 0.0;        // rn + eta
  double window_hi = 0.0;        // gamma - rn
  bool window_nonempty = false;  // window_lo < window_hi
  double tau = 0.0;
  bool tau_in_window = false;    // window_lo < tau < window_hi
  double lambda_min_gram = 0.0;  // min eigenvalue of J restricted to the strong
                                 // set; +inf for an empty strong set
};

RegimeReport check_regime(const DesignSpec& design, const CoefficientSpec& spec,
                          double rn, double tau);

}  // namespace hdps

#endif  // HDPS_REGIME_HPP_
