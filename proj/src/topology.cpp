#include <stdexcept>
#include <string>

#include "gaussnet/graphs.hpp"

namespace gaussnet {

namespace {

void add_both(std::vector<Edge>& edges, int a, int b) {
  edges.push_back({a, b});
  edges.push_back({b, a});
}

void require_n(const TopologySpec& spec, int minimum) {
  if (spec.n < minimum) {
    throw std::invalid_argument(to_string(spec.kind) + " topology needs n >= " + std::to_string(minimum));
  }
}

GraphSequence static_sequence(int n, std::vector<Edge> edges) {
  return GraphSequence({DirectedGraph(n, std::move(edges))}, 1);
}

GraphSequence custom_sequence(const TopologySpec& spec) {
  require_n(spec, 1);
  if (spec.schedule.empty()) throw std::invalid_argument("custom topology needs a non-empty schedule");
  std::vector<DirectedGraph> period;
  for (const auto& step : spec.schedule) period.emplace_back(spec.n, step);

  const int period_len = static_cast<int>(period.size());
  if (spec.window) {
    GraphSequence seq(std::move(period), *spec.window);
    if (spec.validate && !validate_b_connectivity(seq, *spec.window)) {
      throw std::invalid_argument("custom schedule is not strongly connected over windows of B = " +
                                  std::to_string(*spec.window));
    }
    return seq;
  }

  // Smallest window that works. Any valid window is found by P * n since
  // each aligned window of that length covers every slot n times.
  GraphSequence probe(period, 1);
  for (int b = 1; b <= period_len * spec.n; ++b) {
    if (validate_b_connectivity(probe, b)) return GraphSequence(std::move(period), b);
  }
  if (spec.validate) throw std::invalid_argument("custom schedule is never jointly strongly connected");
  return GraphSequence(std::move(period), period_len);
}

}  // namespace

std::string to_string(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::path: return "path";
    case TopologyKind::cycle: return "cycle";
    case TopologyKind::grid: return "grid";
    case TopologyKind::complete: return "complete";
    case TopologyKind::star: return "star";
    case TopologyKind::ring_hub: return "ring-hub";
    case TopologyKind::round_robin: return "round-robin";
    case TopologyKind::custom: return "custom";
  }
  return "unknown";
}

std::optional<TopologyKind> topology_kind_from_string(const std::string& s) {
  for (TopologyKind k : {TopologyKind::path, TopologyKind::cycle, TopologyKind::grid, TopologyKind::complete,
                         TopologyKind::star, TopologyKind::ring_hub, TopologyKind::round_robin,
                         TopologyKind::custom}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

GraphSequence generate_graph_sequence(const TopologySpec& spec) {
  std::vector<Edge> edges;
  switch (spec.kind) {
    case TopologyKind::path:
      require_n(spec, 1);
      for (int i = 0; i + 1 < spec.n; ++i) add_both(edges, i, i + 1);
      return static_sequence(spec.n, std::move(edges));

    case TopologyKind::cycle:
      require_n(spec, 1);
      for (int i = 0; i < spec.n; ++i) {
        const int next = (i + 1) % spec.n;
        if (spec.directed) {
          edges.push_back({i, next});
        } else {
          add_both(edges, i, next);
        }
      }
      return static_sequence(spec.n, std::move(edges));

    case TopologyKind::grid: {
      if (spec.rows < 1 || spec.cols < 1) throw std::invalid_argument("grid needs rows >= 1 and cols >= 1");
      if (spec.n != 0 && spec.n != spec.rows * spec.cols) {
        throw std::invalid_argument("grid " + std::to_string(spec.rows) + "x" + std::to_string(spec.cols) +
                                    " does not have n = " + std::to_string(spec.n) + " agents");
      }
      const int n = spec.rows * spec.cols;
      for (int r = 0; r < spec.rows; ++r) {
        for (int c = 0; c < spec.cols; ++c) {
          const int v = r * spec.cols + c;
          if (c + 1 < spec.cols) add_both(edges, v, v + 1);
          if (r + 1 < spec.rows) add_both(edges, v, v + spec.cols);
        }
      }
      return static_sequence(n, std::move(edges));
    }

    case TopologyKind::complete:
      require_n(spec, 1);
      for (int i = 0; i < spec.n; ++i) {
        for (int j = 0; j < spec.n; ++j) {
          if (i != j) edges.push_back({i, j});
        }
      }
      return static_sequence(spec.n, std::move(edges));

    case TopologyKind::star:
      require_n(spec, 1);
      for (int i = 1; i < spec.n; ++i) add_both(edges, 0, i);
      return static_sequence(spec.n, std::move(edges));

    case TopologyKind::ring_hub: {
      require_n(spec, 2);
      const int fanout = spec.hub_fanout.value_or(spec.n - 1);
      if (fanout < 0 || fanout > spec.n - 1) {
        throw std::invalid_argument("ring-hub fanout must lie in 0..n-1");
      }
      for (int i = 0; i < spec.n; ++i) edges.push_back({i, (i + 1) % spec.n});
      for (int i = 1; i <= fanout; ++i) edges.push_back({0, i});
      return static_sequence(spec.n, std::move(edges));
    }

    case TopologyKind::round_robin: {
      require_n(spec, 1);
      if (spec.n == 1) return static_sequence(1, {});
      std::vector<DirectedGraph> period;
      for (int k = 0; k < spec.n; ++k) {
        std::vector<Edge> step;
        add_both(step, k, (k + 1) % spec.n);
        period.emplace_back(spec.n, std::move(step));
      }
      return GraphSequence(std::move(period), spec.n);
    }

    case TopologyKind::custom:
      return custom_sequence(spec);
  }
  throw std::invalid_argument("unknown topology kind");
}

}  // namespace gaussnet
