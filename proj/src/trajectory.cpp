#include "gaussnet/trajectory.hpp"

#include <stdexcept>

#include "gaussnet/seeding.hpp"

namespace gaussnet {

TrajectoryRecord run_trajectory(const ExperimentConfig& config, const AlgorithmSpec& algo, std::int64_t trial) {
  return run_trajectory(config, algo, trial, config.horizon);
}

TrajectoryRecord run_trajectory(const ExperimentConfig& config, const AlgorithmSpec& algo, std::int64_t trial,
                                std::int64_t horizon) {
  if (horizon < 0) throw std::invalid_argument("horizon must be nonnegative");
  const Population& pop = config.population;
  const int n = pop.size();
  const auto noise = config.noise_enabled ? ObservationNoise::enabled : ObservationNoise::disabled;
  const auto t = static_cast<std::uint64_t>(trial);

  std::vector<RandomStream> obs_streams;
  std::vector<RandomStream> comm_streams;
  obs_streams.reserve(n);
  for (int i = 0; i < n; ++i) obs_streams.emplace_back(observation_seed(config.master_seed, t, i));
  if (algo.kind == AlgorithmKind::lwr) {
    comm_streams.reserve(n);
    for (int i = 0; i < n; ++i) comm_streams.emplace_back(communication_seed(config.master_seed, t, i));
  }

  const std::vector<WeightMatrix> mixing =
      algo.kind == AlgorithmKind::lwr ? std::vector<WeightMatrix>{} : mixing_schedule(config.graphs, algo);

  TrajectoryRecord rec{trial, config.master_seed, Matrix(horizon + 1, n), Matrix(horizon + 1, n)};
  EstimatorState state = initial_state(pop, algo.tau_init);
  rec.theta.row(0) = state.theta.transpose();
  rec.tau.row(0) = state.tau.transpose();

  Observations obs(n);
  std::vector<double> dense_obs(n);
  for (std::int64_t k = 0; k < horizon; ++k) {
    for (int i = 0; i < n; ++i) {
      if (pop[i].blind()) {
        obs[i].reset();
        dense_obs[i] = 0.0;
      } else {
        obs[i] = dense_obs[i] = sample_observation(pop[i], obs_streams[i], noise);
      }
    }
    const std::size_t slot = static_cast<std::size_t>(k % static_cast<std::int64_t>(config.graphs.period_length()));
    switch (algo.kind) {
      case AlgorithmKind::proposed:
        state = proposed_step(state, mixing[slot], obs, pop);
        break;
      case AlgorithmKind::biau:
        state = biau_step(state, mixing[slot], dense_obs);
        break;
      case AlgorithmKind::lwr:
        state = lwr_step(state, config.graphs.at(k), dense_obs, algo, comm_streams);
        break;
    }
    rec.theta.row(k + 1) = state.theta.transpose();
    rec.tau.row(k + 1) = state.tau.transpose();
  }
  return rec;
}

}  // namespace gaussnet
