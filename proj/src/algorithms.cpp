#include "gaussnet/algorithms.hpp"

#include <cmath>
#include <stdexcept>

namespace gaussnet {

std::string to_string(AlgorithmKind kind) {
  switch (kind) {
    case AlgorithmKind::proposed: return "proposed";
    case AlgorithmKind::biau: return "biau";
    case AlgorithmKind::lwr: return "lwr";
  }
  return "unknown";
}

std::optional<AlgorithmKind> algorithm_kind_from_string(const std::string& s) {
  for (AlgorithmKind k : {AlgorithmKind::proposed, AlgorithmKind::biau, AlgorithmKind::lwr}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

EstimatorState initial_state(const Population& pop, TauInit tau_init) {
  const int n = pop.size();
  EstimatorState s{Vector(n), Vector(n), 0};
  for (int i = 0; i < n; ++i) {
    s.theta[i] = pop[i].theta_init;
    s.tau[i] = tau_init == TauInit::paper ? pop[i].precision : 0.0;
  }
  return s;
}

namespace {

void require_size(std::size_t actual, int n, const char* what) {
  if (actual != static_cast<std::size_t>(n)) {
    throw std::invalid_argument(std::string(what) + " has the wrong number of agents");
  }
}

}  // namespace

EstimatorState proposed_step(const EstimatorState& state, const WeightMatrix& a, const Observations& obs,
                             const Population& pop) {
  const int n = state.n();
  require_size(static_cast<std::size_t>(a.n()), n, "weight matrix");
  require_size(obs.size(), n, "observation vector");
  require_size(static_cast<std::size_t>(pop.size()), n, "population");

  // x = tau .* theta is the mixed mass; theta is recovered as x / tau.
  const Vector mass = a.entries() * state.tau.cwiseProduct(state.theta);
  const Vector tau_mix = a.entries() * state.tau;

  EstimatorState next{Vector(n), Vector(n), state.k + 1};
  for (int i = 0; i < n; ++i) {
    const AgentProfile& agent = pop[i];
    if (agent.blind() == obs[i].has_value()) {
      throw std::invalid_argument(agent.blind() ? "observation supplied for a blind agent"
                                                : "missing observation for an observing agent");
    }
    const double injected = agent.blind() ? 0.0 : agent.precision * *obs[i];
    const double tau = tau_mix[i] + agent.precision;
    next.tau[i] = tau;
    next.theta[i] = tau > 0.0 ? (mass[i] + injected) / tau : state.theta[i];
  }
  return next;
}

EstimatorState biau_step(const EstimatorState& state, const WeightMatrix& a, std::span<const double> obs) {
  const int n = state.n();
  require_size(static_cast<std::size_t>(a.n()), n, "weight matrix");
  require_size(obs.size(), n, "observation vector");
  if (!a.is_doubly_stochastic(kStochasticTolerance)) {
    throw std::invalid_argument("running-average consensus needs a doubly stochastic weight matrix");
  }
  const double k = static_cast<double>(state.k);
  const Vector mixed = a.entries() * state.theta;
  EstimatorState next{Vector(n), Vector::Constant(n, k + 1.0), state.k + 1};
  for (int i = 0; i < n; ++i) next.theta[i] = (k / (k + 1.0)) * mixed[i] + obs[i] / (k + 1.0);
  return next;
}

EstimatorState lwr_step(const EstimatorState& state, const DirectedGraph& g, std::span<const double> obs,
                        const AlgorithmSpec& spec, std::span<RandomStream> comm_noise) {
  const int n = state.n();
  require_size(static_cast<std::size_t>(g.n()), n, "graph");
  require_size(obs.size(), n, "observation vector");
  if (!(spec.lwr_comm_precision > 0.0)) throw std::invalid_argument("communication precision must be positive");
  if (spec.lwr_comm_noise) require_size(comm_noise.size(), n, "communication noise streams");

  const double c = spec.lwr_comm_precision;
  const double noise_sd = spec.lwr_noise_scale == CommNoiseScale::precision ? 1.0 / std::sqrt(c) : std::sqrt(c);

  EstimatorState next{Vector(n), Vector(n), state.k + 1};
  for (int i = 0; i < n; ++i) {
    double signals = 0.0;
    for (int j : g.in_neighbors(i)) {
      const double e = spec.lwr_comm_noise ? noise_sd * comm_noise[i].standard_normal() : 0.0;
      signals += state.theta[j] + e;
    }
    const double degree = static_cast<double>(g.in_degree(i)) + 1.0;
    const double tau = state.tau[i] + degree * c;
    next.tau[i] = tau;
    next.theta[i] = (state.tau[i] * state.theta[i] + c * signals + c * obs[i]) / tau;
  }
  return next;
}

}  // namespace gaussnet
