#ifndef GAUSSNET_TRAJECTORY_HPP
#define GAUSSNET_TRAJECTORY_HPP

#include <cstdint>

#include "gaussnet/config.hpp"

namespace gaussnet {

/// One trial: row k holds every agent's estimate after k steps.
struct TrajectoryRecord {
  std::int64_t trial = 0;
  std::uint64_t master_seed = 0;
  Matrix theta;  // (K + 1) x n
  Matrix tau;    // (K + 1) x n

  std::int64_t horizon() const { return theta.rows() - 1; }
  int n() const { return static_cast<int>(theta.cols()); }
};

/// Runs `algo` for config.horizon steps. Observation streams depend only on
/// (master_seed, trial, agent), so every algorithm sees the same draws.
TrajectoryRecord run_trajectory(const ExperimentConfig& config, const AlgorithmSpec& algo, std::int64_t trial);

/// Same, with the horizon overridden (horizon 0 returns the initial state).
TrajectoryRecord run_trajectory(const ExperimentConfig& config, const AlgorithmSpec& algo, std::int64_t trial,
                                std::int64_t horizon);

}  // namespace gaussnet

#endif  // GAUSSNET_TRAJECTORY_HPP
