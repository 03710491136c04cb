#ifndef HDPS_LINTEST_HPP_
#define HDPS_LINTEST_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "hdps/postsel.hpp"

namespace hdps {

inline constexpr double kDefaultRankTol = 1e-8;
inline constexpr std::int64_t kDefaultMcDraws = 200000;

// H0: A theta = b against H1: A theta != b, with q = rows(A) fixed. No
// sparsity is imposed on A.
struct Hypothesis {
  Eigen::MatrixXd A;  // q x p
  Eigen::VectorXd b;  // q

  int q() const { return static_cast<int>(A.rows()); }
  void validate(int p) const;  // dimension checks, q <= p
};

// Plug-in spectrum of the null limit: sigma2_hat and the nonzero eigenvalues
// of A_T gram_sub^{-1} A_T', descending.
struct NullSpectrum {
  double sigma2_hat = 0.0;
  std::vector<double> lambdas;  // descending, all > rank_tol * max
  double rank_tol = kDefaultRankTol;

  int rank() const { return static_cast<int>(lambdas.size()); }
};

enum class QuantileMethod { MonteCarlo, MomentMatch };
std::string to_string(QuantileMethod m);

struct TestResult {
  double W = 0.0;
  NullSpectrum spectrum;
  double c_hat = 0.0;
  double alpha = 0.0;
  bool reject = false;
  QuantileMethod method = QuantileMethod::MonteCarlo;
  std::int64_t mc_draws = 0;      // 0 for moment matching
  std::uint64_t mc_seed = 0;
  bool degenerate_null = false;   // empty spectrum: c_hat = 0
};

// n * ||A theta_tilde - b||^2
double test_statistic(const PostFit& fit, const Hypothesis& hyp);

// A_T gram_sub^{-1} A_T' at the selected support, symmetrized on output.
// Empty support gives the q x q zero matrix; a singular gram_sub throws.
Eigen::MatrixXd plugin_sigma_A(const Hypothesis& hyp, const SupportSet& support,
                               const Eigen::MatrixXd& gram_sub);

// Eigenvalues of a symmetric PSD matrix above rank_tol * lambda_max, sorted
// descending. Asymmetry beyond 1e-10 throws NumericalError.
std::vector<double> nonzero_eigenvalues(const Eigen::MatrixXd& M,
                                        double rank_tol = kDefaultRankTol);

// Empirical upper-alpha quantile of sigma2 * sum_j lambda_j chi2(1)_j from
// `draws` samples. Draws are generated in fixed-size shards with
// counter-derived substreams, so the result depends only on (draws, seed)
// regardless of the worker count. Returns 0 for an empty spectrum.
double mc_quantile(double sigma2, const std::vector<double>& lambdas, double alpha,
                   std::int64_t draws, std::uint64_t seed, int workers = 1);

// Two-moment match of sum lambda_j chi2(1)_j to g * chi2(d) with
// g = sum(L^2)/sum(L), d = (sum L)^2 / sum(L^2); exact when all weights are
// equal. Returns 0 for an empty spectrum.
double satterthwaite_quantile(double sigma2, const std::vector<double>& lambdas,
                              double alpha);

// Upper-alpha quantile of chi2(dof), dof > 0 real.
double chi_squared_quantile(double dof, double alpha);

// Strict rejection rule W > c_hat.
bool decide(double W, double c_hat);

// sigma2_hat and plug-in spectrum from a completed post-selection fit.
NullSpectrum estimate_null_spectrum(const PostFit& fit, const Hypothesis& hyp,
                                    double rank_tol = kDefaultRankTol);

TestResult run_test(const PostFit& fit, const Hypothesis& hyp, double alpha,
                    QuantileMethod method, std::int64_t mc_draws = kDefaultMcDraws,
                    std::uint64_t mc_seed = 0);

}  // namespace hdps

#endif  // HDPS_LINTEST_HPP_
