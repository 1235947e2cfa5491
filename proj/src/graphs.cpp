#include "gaussnet/graphs.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gaussnet {

DirectedGraph::DirectedGraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph must have at least one agent");
  for (const Edge& e : edges) {
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n) {
      throw std::invalid_argument("edge (" + std::to_string(e.from + 1) + ", " +
                                  std::to_string(e.to + 1) + ") outside 1.." + std::to_string(n));
    }
  }
  std::erase_if(edges, [](const Edge& e) { return e.from == e.to; });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  out_.resize(n);
  in_.resize(n);
  for (const Edge& e : edges_) {
    out_[e.from].push_back(e.to);
    in_[e.to].push_back(e.from);
  }
}

bool DirectedGraph::has_edge(int from, int to) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{from, to});
}

bool DirectedGraph::is_symmetric() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [this](const Edge& e) { return has_edge(e.to, e.from); });
}

namespace {

std::vector<bool> reachable_from(int root, int n, const std::vector<std::vector<int>>& adj) {
  std::vector<bool> seen(n, false);
  std::vector<int> stack{root};
  seen[root] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

bool is_strongly_connected(const DirectedGraph& g) {
  // Node 0 reaches everyone forward and backward.
  std::vector<std::vector<int>> fwd(g.n()), bwd(g.n());
  for (int v = 0; v < g.n(); ++v) {
    fwd[v] = g.out_neighbors(v);
    bwd[v] = g.in_neighbors(v);
  }
  auto all = [](const std::vector<bool>& s) { return std::all_of(s.begin(), s.end(), [](bool b) { return b; }); };
  return all(reachable_from(0, g.n(), fwd)) && all(reachable_from(0, g.n(), bwd));
}

bool is_regular(const DirectedGraph& g) {
  const int d = g.out_degree(0);
  for (int v = 0; v < g.n(); ++v) {
    if (g.out_degree(v) != d || g.in_degree(v) != d) return false;
  }
  return true;
}

DirectedGraph graph_union(const std::vector<const DirectedGraph*>& graphs) {
  if (graphs.empty()) throw std::invalid_argument("union of zero graphs");
  const int n = graphs.front()->n();
  std::vector<Edge> edges;
  for (const DirectedGraph* g : graphs) {
    if (g->n() != n) throw std::invalid_argument("union of graphs with different agent counts");
    edges.insert(edges.end(), g->edges().begin(), g->edges().end());
  }
  return DirectedGraph(n, std::move(edges));
}

GraphSequence::GraphSequence(std::vector<DirectedGraph> period, int window)
    : n_(0), window_(window), period_(std::move(period)) {
  if (period_.empty()) throw std::invalid_argument("graph schedule is empty");
  if (window < 1) throw std::invalid_argument("connectivity window must be >= 1");
  n_ = period_.front().n();
  for (const DirectedGraph& g : period_) {
    if (g.n() != n_) throw std::invalid_argument("scheduled graphs disagree on agent count");
  }
}

WeightMatrix::WeightMatrix(const DirectedGraph& g, Matrix entries) : entries_(std::move(entries)) {
  const int n = g.n();
  if (entries_.rows() != n || entries_.cols() != n) {
    throw std::invalid_argument("weight matrix shape does not match graph");
  }
  for (int j = 0; j < n; ++j) {
    if (!(entries_(j, j) > 0.0)) throw std::invalid_argument("weight matrix has a nonpositive diagonal entry");
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const double a = entries_(i, j);
      if (a < 0.0) throw std::invalid_argument("weight matrix has a negative entry");
      if (a != 0.0 && i != j && !g.has_edge(j, i)) {
        throw std::invalid_argument("weight matrix entry outside the graph support");
      }
      sum += a;
    }
    if (std::abs(sum - 1.0) > kStochasticTolerance) {
      throw std::invalid_argument("weight matrix column " + std::to_string(j + 1) + " does not sum to 1");
    }
  }
}

bool WeightMatrix::is_doubly_stochastic(double tol) const {
  for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
    if (std::abs(entries_.row(i).sum() - 1.0) > tol) return false;
  }
  return true;
}

WeightMatrix build_weight_matrix(const DirectedGraph& g) {
  const int n = g.n();
  Matrix a = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    const double w = 1.0 / (g.out_degree(j) + 1);
    a(j, j) = w;
    for (int i : g.out_neighbors(j)) a(i, j) = w;
  }
  return WeightMatrix(g, std::move(a));
}

WeightMatrix lazy_metropolis_weights(const DirectedGraph& g) {
  if (!g.is_symmetric()) throw std::invalid_argument("lazy Metropolis weights need a symmetric graph");
  const int n = g.n();
  Matrix a = Matrix::Zero(n, n);
  for (const Edge& e : g.edges()) {
    a(e.to, e.from) = 1.0 / (2.0 * std::max(g.out_degree(e.from), g.out_degree(e.to)));
  }
  for (int i = 0; i < n; ++i) a(i, i) = 1.0 - (a.col(i).sum() - a(i, i));
  return WeightMatrix(g, std::move(a));
}

bool validate_b_connectivity(const GraphSequence& seq, int window) {
  if (window < 1) throw std::invalid_argument("connectivity window must be >= 1");
  const auto period = static_cast<std::int64_t>(seq.period_length());
  const std::int64_t windows = period / std::gcd(period, static_cast<std::int64_t>(window));
  for (std::int64_t m = 0; m < windows; ++m) {
    std::vector<const DirectedGraph*> members;
    for (std::int64_t k = m * window; k < (m + 1) * window; ++k) members.push_back(&seq.at(k));
    if (!is_strongly_connected(graph_union(members))) return false;
  }
  return true;
}

namespace {

// One mixing matrix per schedule slot.
std::vector<Matrix> period_matrices(const GraphSequence& seq) {
  std::vector<Matrix> out;
  out.reserve(seq.period_length());
  for (const DirectedGraph& g : seq.period()) out.push_back(build_weight_matrix(g).entries());
  return out;
}

}  // namespace

Matrix matrix_product(const GraphSequence& seq, std::int64_t k, std::int64_t t) {
  if (t < 0 || k < t) throw std::invalid_argument("matrix_product needs k >= t >= 0");
  const auto mats = period_matrices(seq);
  const auto period = static_cast<std::int64_t>(mats.size());
  Matrix prod = mats[t % period];
  for (std::int64_t s = t + 1; s <= k; ++s) prod = mats[s % period] * prod;
  return prod;
}

double column_spread(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("column_spread needs a square matrix");
  double spread = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    spread = std::max(spread, m.row(i).maxCoeff() - m.row(i).minCoeff());
  }
  return spread;
}

double empirical_delta(const GraphSequence& seq, std::int64_t horizon) {
  if (horizon < 1) throw std::invalid_argument("empirical_delta needs horizon >= 1");
  const auto mats = period_matrices(seq);
  const auto period = static_cast<std::int64_t>(mats.size());
  Vector v = Vector::Ones(seq.n());
  double delta = 1.0;
  for (std::int64_t k = 0; k <= horizon; ++k) {
    v = mats[k % period] * v;
    delta = std::min(delta, v.minCoeff());
  }
  return delta;
}

GraphConstants lemma1_constants(int n, int window, bool regular) {
  if (n < 1 || window < 1) throw std::invalid_argument("lemma1_constants needs n >= 1 and B >= 1");
  if (regular && window > 1) throw std::invalid_argument("regular-graph constants require B = 1");

  GraphConstants gc;
  gc.window = window;
  gc.regular = regular;
  if (n == 1) {
    gc.C = regular ? std::sqrt(2.0) : 4.0;
    gc.lambda = 0.0;
    gc.lambda_gap = 1.0;
    gc.delta = 1.0;
    return gc;
  }
  if (regular) {
    const double gap = 1.0 / (4.0 * std::pow(static_cast<double>(n), 3));
    gc.C = std::sqrt(2.0);
    gc.lambda = 1.0 - gap;
    gc.lambda_gap = gap;
    gc.delta = 1.0;
    return gc;
  }
  // n^{-nB} through logs so it underflows gracefully instead of overflowing.
  const double log_inv = -static_cast<double>(n) * window * std::log(static_cast<double>(n));
  const double inv = std::exp(log_inv);
  gc.C = 4.0;
  gc.lambda = std::pow(1.0 - inv, 1.0 / window);
  gc.lambda_gap = -std::expm1(std::log1p(-inv) / window);
  gc.delta = inv;
  return gc;
}

GraphConstants graph_constants(const GraphSequence& seq) {
  const bool regular = seq.window() == 1 &&
                       std::all_of(seq.period().begin(), seq.period().end(),
                                   [](const DirectedGraph& g) { return is_regular(g); });
  return lemma1_constants(seq.n(), seq.window(), regular);
}

}  // namespace gaussnet
