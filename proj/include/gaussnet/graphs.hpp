// Directed communication graphs, periodic graph schedules and the
// column-stochastic mixing matrices built from them.
//
// Agents are indexed 0..n-1 internally. Config files and CSV output use
// 1-based agent numbers; conversion happens at the harness boundary.

#ifndef GAUSSNET_GRAPHS_HPP
#define GAUSSNET_GRAPHS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gaussnet {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Edge `from -> to`: agent `from` can send to agent `to`.
struct Edge {
  int from = 0;
  int to = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class DirectedGraph {
 public:
  /// Throws std::invalid_argument on n < 1 or an endpoint outside [0, n).
  /// Self-pairs are dropped and duplicates merged.
  DirectedGraph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int from, int to) const;

  /// Number of non-self out-edges.
  int out_degree(int node) const { return static_cast<int>(out_[node].size()); }
  int in_degree(int node) const { return static_cast<int>(in_[node].size()); }
  const std::vector<int>& out_neighbors(int node) const { return out_[node]; }
  const std::vector<int>& in_neighbors(int node) const { return in_[node]; }

  /// True when every edge has its reverse.
  bool is_symmetric() const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

bool is_strongly_connected(const DirectedGraph& g);

/// Every node has the same in-degree and out-degree d. This is the
/// condition under which the out-degree weights are doubly stochastic.
bool is_regular(const DirectedGraph& g);

/// Union of edge sets. All graphs must share n.
DirectedGraph graph_union(const std::vector<const DirectedGraph*>& graphs);

/// Periodic schedule: the graph active at step k is period()[k % P].
class GraphSequence {
 public:
  /// Throws std::invalid_argument on an empty period, mismatched n, or
  /// window < 1.
  GraphSequence(std::vector<DirectedGraph> period, int window);

  int n() const { return n_; }
  int window() const { return window_; }
  std::size_t period_length() const { return period_.size(); }
  const std::vector<DirectedGraph>& period() const { return period_; }
  bool is_static() const { return period_.size() == 1; }

  const DirectedGraph& at(std::int64_t k) const {
    return period_[static_cast<std::size_t>(k % static_cast<std::int64_t>(period_.size()))];
  }

 private:
  int n_;
  int window_;
  std::vector<DirectedGraph> period_;
};

/// Column-stochastic mixing matrix whose support is the diagonal plus the
/// edges of the graph it was built from.
class WeightMatrix {
 public:
  /// Validates column sums, positive diagonal and support against `g`.
  WeightMatrix(const DirectedGraph& g, Matrix entries);

  const Matrix& entries() const { return entries_; }
  int n() const { return static_cast<int>(entries_.rows()); }
  double operator()(int i, int j) const { return entries_(i, j); }

  bool is_doubly_stochastic(double tol = 1e-12) const;

 private:
  Matrix entries_;
};

inline constexpr double kStochasticTolerance = 1e-12;

/// Out-degree weights: [A]_ij = 1/(d_j + 1) for j == i or edge j -> i.
WeightMatrix build_weight_matrix(const DirectedGraph& g);

/// Lazy Metropolis weights for a symmetric graph:
/// a_ij = 1 / (2 max(deg_i, deg_j)) off the diagonal, remainder on it.
/// Throws std::invalid_argument for asymmetric graphs.
WeightMatrix lazy_metropolis_weights(const DirectedGraph& g);

/// True iff, for every aligned window [mB, (m+1)B - 1], the union graph is
/// strongly connected. Windows are checked until their start repeats
/// modulo the schedule period.
bool validate_b_connectivity(const GraphSequence& seq, int window);

/// A_k A_{k-1} ... A_t with out-degree weights. Throws on k < t or t < 0.
Matrix matrix_product(const GraphSequence& seq, std::int64_t k, std::int64_t t);

/// max over i, j, j' of |m_ij - m_ij'|.
double column_spread(const Matrix& m);

/// Minimum entry of A_{k:0} 1 over 0 <= k <= horizon.
double empirical_delta(const GraphSequence& seq, std::int64_t horizon);

struct GraphConstants {
  double C = 1.0;
  double lambda = 0.0;
  /// 1 - lambda, computed without cancellation. For large n lambda rounds
  /// to 1 in double precision while this stays positive.
  double lambda_gap = 1.0;
  double delta = 1.0;
  int window = 1;
  bool regular = false;
};

/// Geometric mixing constants for B-strongly-connected sequences.
/// General case: C = 4, lambda = (1 - n^{-nB})^{1/B}, delta = n^{-nB}.
/// Regular case (B = 1 only): C = sqrt(2), lambda = 1 - 1/(4 n^3), delta = 1.
/// A single agent mixes instantly: lambda = 0, delta = 1.
GraphConstants lemma1_constants(int n, int window, bool regular);

/// Constants for a given sequence, using the regular case when every graph
/// in a static schedule is regular.
GraphConstants graph_constants(const GraphSequence& seq);

// ---------------------------------------------------------------------------
// Topology generators

enum class TopologyKind { path, cycle, grid, complete, star, ring_hub, round_robin, custom };

std::string to_string(TopologyKind kind);
std::optional<TopologyKind> topology_kind_from_string(const std::string& s);

struct TopologySpec {
  TopologyKind kind = TopologyKind::complete;
  int n = 0;
  // grid
  int rows = 0;
  int cols = 0;
  // cycle: one-way ring when true, bidirectional otherwise
  bool directed = true;
  // ring_hub: number of extra out-edges from the hub (agent 0) to agents
  // 1..hub_fanout. Defaults to n - 1 when unset.
  std::optional<int> hub_fanout;
  // custom: per-step edge lists, 0-based
  std::vector<std::vector<Edge>> schedule;
  std::optional<int> window;
  bool validate = true;
};

/// Throws std::invalid_argument on dimension mismatches or a custom schedule
/// that fails validation when `spec.validate` is set.
GraphSequence generate_graph_sequence(const TopologySpec& spec);

}  // namespace gaussnet

#endif  // GAUSSNET_GRAPHS_HPP
