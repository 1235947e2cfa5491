// Monte Carlo execution and CSV emission.
//
// Files written to config.output_dir:
//   trajectory_<algorithm>.csv   trial,k,agent,theta,tau
//   summary_<algorithm>.csv      k,agent,mean_theta,mean_abs_error,abs_mean_error,std_theta,bound
//   bound.csv                    k,bound
//   metadata.json                scenario, constants and seed
// Agents are 1-based. Reals use 17 significant digits.

#ifndef GAUSSNET_EXPERIMENT_HPP
#define GAUSSNET_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "gaussnet/analysis.hpp"
#include "gaussnet/config.hpp"

namespace gaussnet {

struct ExperimentResult {
  double theta_star = 0.0;
  GraphConstants constants;
  BoundInputs bound_inputs;
  std::vector<Summary> summaries;  // one per configured algorithm, same order
};

/// Runs every configured algorithm over `trials` trajectories, in parallel
/// batches folded in trial order, and writes the CSV files when
/// config.output_dir is non-empty. Output is independent of thread count.
ExperimentResult run_experiment(const ExperimentConfig& config);

void write_summary_csv(std::ostream& out, const Summary& summary);
void write_trajectory_header(std::ostream& out);
void write_trajectory_rows(std::ostream& out, const TrajectoryRecord& record, std::int64_t stride);
void write_bound_csv(std::ostream& out, const BoundInputs& b, std::int64_t horizon);

/// c k^{-p} for k = 1..horizon; element k-1 holds step k.
std::vector<double> emit_reference_curve(double c, double p, std::int64_t horizon);

/// "%.17g".
std::string format_real(double x);

}  // namespace gaussnet

#endif  // GAUSSNET_EXPERIMENT_HPP
