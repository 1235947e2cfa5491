// Convergence bound, Monte Carlo aggregation and rate diagnostics.

#ifndef GAUSSNET_ANALYSIS_HPP
#define GAUSSNET_ANALYSIS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gaussnet/graphs.hpp"
#include "gaussnet/models.hpp"
#include "gaussnet/trajectory.hpp"

namespace gaussnet {

struct BoundInputs {
  double tau_max = 1.0;
  double tau_min = 1.0;  // smallest non-zero precision
  double delta = 1.0;
  double C = 1.0;
  double lambda = 0.0;
  double lambda_gap = 1.0;  // 1 - lambda without cancellation
  double init_l1 = 0.0;     // ||theta_0 - theta* 1||_1, every agent
  double mean_l1 = 0.0;     // ||theta - theta* 1||_1, observing agents only
};

/// (tau_max / (tau_min k delta)) (init_l1 + 2 C mean_l1 / (1 - lambda)).
/// Throws std::invalid_argument for k < 1.
double bound_eq9(std::int64_t k, const BoundInputs& b);

/// Fills the bound inputs from a population and graph constants.
BoundInputs bound_inputs_from(const Population& pop, const GraphConstants& gc);

struct SummaryMetadata {
  std::string topology;
  std::string algorithm;
  std::string population;
  std::uint64_t master_seed = 0;
  double theta_star = 0.0;
};

/// Per-step, per-agent Monte Carlo aggregates. Row r of every matrix
/// corresponds to step steps[r].
struct Summary {
  int n = 0;
  std::int64_t trials = 0;
  std::vector<std::int64_t> steps;
  Matrix mean_theta;
  Matrix mean_abs_error;  // mean over trials of |theta - theta*|
  Matrix abs_mean_error;  // |mean over trials of theta - theta*|
  Matrix std_theta;       // sample standard deviation over trials
  std::vector<double> bound;  // per step; NaN at k = 0 or when unset
  SummaryMetadata meta;

  /// Agent-averaged column of `m` as a curve aligned with `steps`.
  std::vector<double> agent_mean(const Matrix& m) const;
};

/// Streaming fold of trajectory records. Records must be added in trial
/// order for bit-reproducible sums.
class SummaryAccumulator {
 public:
  /// Rows kept: k % stride == 0, plus k = horizon.
  SummaryAccumulator(int n, std::int64_t horizon, double theta_star, std::int64_t stride = 1);

  void add(const TrajectoryRecord& record);
  Summary finish() const;

 private:
  int n_;
  std::int64_t horizon_;
  double theta_star_;
  std::vector<std::int64_t> steps_;
  std::int64_t count_ = 0;
  Matrix mean_;
  Matrix m2_;
  Matrix abs_sum_;
};

/// Both error curves over a set of records sharing (horizon, n).
/// Throws std::invalid_argument on an empty set or a shape mismatch.
Summary mc_mean_error(std::span<const TrajectoryRecord> records, double theta_star);

/// Fills summary.bound from bound_eq9.
void attach_bound(Summary& summary, const BoundInputs& b);

/// Least-squares slope of log(value) against log(k) over k in [k_lo, k_hi].
/// Throws std::invalid_argument unless k_hi >= 2 k_lo and every value in the
/// window is positive.
double loglog_slope(std::span<const std::int64_t> steps, std::span<const double> values, std::int64_t k_lo,
                    std::int64_t k_hi);

/// Overload for a dense curve where curve[k] is the value at step k.
double loglog_slope(std::span<const double> curve, std::int64_t k_lo, std::int64_t k_hi);

/// For every step k >= 1 and agent i:
///   |mean theta - theta*| <= bound_eq9(k) + slack * std / sqrt(trials).
bool check_bound(const Summary& summary, const BoundInputs& b, double confidence_slack);

}  // namespace gaussnet

#endif  // GAUSSNET_ANALYSIS_HPP
