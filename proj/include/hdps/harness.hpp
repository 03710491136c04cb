#ifndef HDPS_HARNESS_HPP_
#define HDPS_HARNESS_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hdps/config.hpp"
#include "hdps/regime.hpp"

namespace hdps {

struct ReplicationRecord {
  int rep = 0;
  std::uint64_t seed = 0;
  bool support_equals_Tgamma = false;
  int support_size = 0;
  double theta_inf_err = 0.0;  // first-stage ||theta_hat - theta0||_inf
  double sigma2_hat = 0.0;
  std::vector<double> projections;  // <u, R_n> per projection vector
  // lasso diagnostics
  double lambda = 0.0;
  int lasso_iterations = 0;
  double lasso_kkt = 0.0;
  bool lasso_converged = false;
  // test fields, absent when the experiment has no hypothesis
  std::optional<double> W;
  std::optional<double> c_hat_mc;
  std::optional<double> c_hat_mm;
  std::optional<bool> reject_mc;
  std::optional<bool> reject_mm;
  std::optional<int> spectrum_rank;
  std::optional<double> spectrum_err;  // max_j |lambda_hat_j - lambda_j|
};

// Resolved experiment context plus the per-replication records.
struct ExperimentResult {
  std::vector<ReplicationRecord> records;
  CoefficientVector truth;
  std::optional<Hypothesis> hypothesis;   // with b resolved
  std::vector<double> true_lambdas;       // spectrum of A J^{-1} A' on the strong set
  std::vector<ProjectionVector> projections;
  std::vector<double> projection_target_sd;  // sigma * sqrt(u' J^{-1} u) on the strong set
  double tau_used = 0.0;
  double rn = 0.0;
  RegimeReport regime;
};

// Runs the full pipeline once per replication with seeds master_seed + k.
// Records are identical for any worker count. Throws RegimeError when the
// regime check fails and force is not set.
ExperimentResult run_replications(const ExperimentConfig& config, int workers = 1,
                                  bool force = false);

double selection_frequency(const std::vector<ReplicationRecord>& records);

// Rejection fraction per quantile method; with an offset b this measures power.
struct RejectionRates {
  double mc = 0.0;
  double mm = 0.0;
};
RejectionRates empirical_size(const std::vector<ReplicationRecord>& records);

// Kolmogorov-Smirnov distance between samples / target_sd and the standard
// normal distribution function.
double ks_distance(const std::vector<double>& samples, double target_sd);

struct ExperimentSummary {
  double selection_frequency = 0.0;
  std::vector<std::string> projection_labels;
  std::vector<double> projection_ks;        // NaN where target sd is zero
  std::vector<double> projection_mean_abs;
  std::vector<double> projection_target_sd;
  std::optional<RejectionRates> rejection;
  double mean_sigma2_hat = 0.0;
  std::optional<double> mean_spectrum_err;
  double mean_support_size = 0.0;
};

ExperimentSummary make_summary(const ExperimentResult& result);

// Writes records.csv (stable column order), summary.json and config.json.
// Byte-identical across reruns of the same config.
void write_report(const ExperimentResult& result, const ExperimentSummary& summary,
                  const ExperimentConfig& config, const std::filesystem::path& out_dir);

}  // namespace hdps

#endif  // HDPS_HARNESS_HPP_
