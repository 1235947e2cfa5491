// Estimator update rules. Every step is a pure function: state in, state out.
//
//   proposed  precision-weighted push-sum over column-stochastic weights
//   biau      running-average consensus over a doubly stochastic matrix
//   lwr       learning without recall with noisy neighbour signals

#ifndef GAUSSNET_ALGORITHMS_HPP
#define GAUSSNET_ALGORITHMS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gaussnet/graphs.hpp"
#include "gaussnet/models.hpp"

namespace gaussnet {

enum class AlgorithmKind { proposed, biau, lwr };

/// paper: tau_0 = tau (the observation precision); zero: tau_0 = 0.
enum class TauInit { paper, zero };

/// How the lwr communication noise parameter is read: as the noise
/// precision (variance 1/tau) or directly as its variance.
enum class CommNoiseScale { precision, variance };

std::string to_string(AlgorithmKind kind);
std::optional<AlgorithmKind> algorithm_kind_from_string(const std::string& s);

struct AlgorithmSpec {
  AlgorithmKind kind = AlgorithmKind::proposed;
  TauInit tau_init = TauInit::paper;
  double lwr_comm_precision = 1.0;
  bool lwr_comm_noise = true;
  CommNoiseScale lwr_noise_scale = CommNoiseScale::precision;
};

struct EstimatorState {
  Vector theta;
  Vector tau;
  std::int64_t k = 0;

  int n() const { return static_cast<int>(theta.size()); }
};

EstimatorState initial_state(const Population& pop, TauInit tau_init);

/// Per-agent observation; empty for blind agents.
using Observations = std::vector<std::optional<double>>;

/// tau' = A tau + tau_obs
/// theta' = (A (tau .* theta) + tau_obs .* s) / tau'
/// An agent whose tau' is zero keeps its estimate.
/// Throws std::invalid_argument on dimension mismatch, a missing observation
/// for an observing agent, or an observation for a blind agent.
EstimatorState proposed_step(const EstimatorState& state, const WeightMatrix& a, const Observations& obs,
                             const Population& pop);

/// theta' = k/(k+1) A theta + s/(k+1), with k = state.k. tau' is set to k+1.
/// Throws std::invalid_argument unless `a` is doubly stochastic.
EstimatorState biau_step(const EstimatorState& state, const WeightMatrix& a, std::span<const double> obs);

/// Learning without recall. For agent i with in-neighbours N_i:
///   tau'   = tau_i + (|N_i| + 1) c
///   theta' = (tau_i theta_i + c sum_{j in N_i} (theta_j + e_j) + c s_i) / tau'
/// where c = spec.lwr_comm_precision and e_j is drawn from comm_noise[i].
/// `comm_noise` holds one stream per receiving agent.
EstimatorState lwr_step(const EstimatorState& state, const DirectedGraph& g, std::span<const double> obs,
                        const AlgorithmSpec& spec, std::span<RandomStream> comm_noise);

}  // namespace gaussnet

#endif  // GAUSSNET_ALGORITHMS_HPP
