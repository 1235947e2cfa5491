// Independent oracles and generators shared by the test suites. Nothing in
// here calls into the code path it is used to check.

#ifndef GAUSSNET_TEST_SUPPORT_HPP
#define GAUSSNET_TEST_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "gaussnet/config.hpp"
#include "gaussnet/graphs.hpp"
#include "gaussnet/models.hpp"

namespace gaussnet::testing {

/// Transitive closure by Floyd-Warshall on a boolean adjacency matrix.
inline bool closure_strongly_connected(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) r[i][i] = true;
  for (const Edge& e : edges) r[e.from][e.to] = true;
  for (int m = 0; m < n; ++m)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (r[i][m] && r[m][j]) r[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!r[i][j]) return false;
  return true;
}

/// Out-degree weights written out entry by entry from raw edge lists.
inline std::vector<std::vector<double>> naive_weights(int n, const std::vector<Edge>& edges) {
  std::vector<int> outdeg(n, 0);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Edge& e : edges) {
    if (e.from != e.to && !adj[e.from][e.to]) {
      adj[e.from][e.to] = true;
      ++outdeg[e.from];
    }
  }
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i == j || adj[j][i]) a[i][j] = 1.0 / (outdeg[j] + 1);
  return a;
}

inline std::vector<std::vector<double>> naive_multiply(const std::vector<std::vector<double>>& x,
                                                       const std::vector<std::vector<double>>& y) {
  const std::size_t n = x.size();
  std::vector<std::vector<double>> z(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][m] * y[m][j];
  return z;
}

inline std::vector<Edge> random_edges(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && coin(rng)) edges.push_back({i, j});
  return edges;
}

inline Population random_population(int n, std::mt19937_64& rng, bool allow_blind = false) {
  std::uniform_real_distribution<double> mean(-5.0, 5.0);
  std::uniform_real_distribution<double> log_prec(-2.0, 2.0);
  std::bernoulli_distribution blind(allow_blind ? 0.2 : 0.0);
  std::vector<AgentProfile> agents;
  for (int i = 0; i < n; ++i) {
    agents.push_back({mean(rng), std::exp(log_prec(rng)), mean(rng)});
    if (blind(rng)) agents.back().precision = 0.0;
  }
  if (std::all_of(agents.begin(), agents.end(), [](const AgentProfile& a) { return a.blind(); })) {
    agents.front().precision = 1.0;
  }
  return Population(std::move(agents));
}

/// Minimal config for tests; no file output.
inline ExperimentConfig make_config(const TopologySpec& topology, Population pop, std::vector<AlgorithmSpec> algos,
                                    std::int64_t horizon, std::int64_t trials, std::uint64_t seed, bool noise) {
  ExperimentConfig c;
  c.topology = topology;
  c.graphs = generate_graph_sequence(topology);
  c.population = std::move(pop);
  c.population_desc = "test";
  c.algorithms = std::move(algos);
  c.horizon = horizon;
  c.trials = trials;
  c.master_seed = seed;
  c.noise_enabled = noise;
  c.threads = 1;
  return c;
}

inline TopologySpec topo(TopologyKind kind, int n) {
  TopologySpec t;
  t.kind = kind;
  t.n = n;
  return t;
}

inline TopologySpec grid_topo(int rows, int cols) {
  TopologySpec t;
  t.kind = TopologyKind::grid;
  t.rows = rows;
  t.cols = cols;
  t.n = rows * cols;
  return t;
}

}  // namespace gaussnet::testing

#endif  // GAUSSNET_TEST_SUPPORT_HPP
