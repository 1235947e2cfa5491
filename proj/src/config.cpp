#include "gaussnet/config.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include <json.hpp>

namespace gaussnet {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw ConfigValidationError(msg); }

void reject_unknown_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) invalid(where + " must be an object");
  const std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& [key, _] : obj.items()) {
    if (!keys.contains(key)) invalid("unknown key '" + key + "' in " + where);
  }
}

template <typename T>
T get_or(const json& obj, const char* key, T fallback, const std::string& where) {
  if (!obj.contains(key)) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    invalid(where + "." + key + " has the wrong type");
  }
}

template <typename T>
T get_required(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) invalid("missing required key " + where + "." + key);
  return get_or<T>(obj, key, T{}, where);
}

std::int64_t get_count(const json& obj, const char* key, std::int64_t fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) invalid(std::string(key) + " must be an integer");
  return v.get<std::int64_t>();
}

std::vector<Edge> parse_edges(const json& list, int step) {
  std::vector<Edge> edges;
  if (!list.is_array()) invalid("topology.schedule[" + std::to_string(step) + "] must be a list of edges");
  for (const json& e : list) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      invalid("topology.schedule[" + std::to_string(step) + "] edges must be [from, to] integer pairs");
    }
    edges.push_back({e[0].get<int>() - 1, e[1].get<int>() - 1});
  }
  return edges;
}

TopologySpec parse_topology(const json& t) {
  reject_unknown_keys(t, "topology",
                      {"kind", "n", "rows", "cols", "directed", "hub_fanout", "schedule", "B", "validate"});
  TopologySpec spec;
  const auto kind_name = get_required<std::string>(t, "kind", "topology");
  const auto kind = topology_kind_from_string(kind_name);
  if (!kind) invalid("unknown topology.kind '" + kind_name + "'");
  spec.kind = *kind;
  spec.n = get_or<int>(t, "n", 0, "topology");
  spec.rows = get_or<int>(t, "rows", 0, "topology");
  spec.cols = get_or<int>(t, "cols", 0, "topology");
  spec.directed = get_or<bool>(t, "directed", true, "topology");
  spec.validate = get_or<bool>(t, "validate", true, "topology");
  if (t.contains("hub_fanout")) spec.hub_fanout = get_or<int>(t, "hub_fanout", 0, "topology");
  if (t.contains("B")) spec.window = get_or<int>(t, "B", 1, "topology");
  if (t.contains("schedule")) {
    const json& sched = t.at("schedule");
    if (!sched.is_array()) invalid("topology.schedule must be an array of edge lists");
    for (std::size_t s = 0; s < sched.size(); ++s) spec.schedule.push_back(parse_edges(sched[s], static_cast<int>(s)));
  }
  if (spec.kind == TopologyKind::grid && spec.n == 0) spec.n = spec.rows * spec.cols;
  return spec;
}

// "name(a, b, ...)" -> name and numeric arguments.
std::pair<std::string, std::vector<double>> split_preset(const std::string& text) {
  static const std::regex form(R"(^\s*([a-z][a-z-]*)\s*\(([^)]*)\)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, form)) invalid("population.preset '" + text + "' is not of the form name(args)");
  std::vector<double> args;
  std::stringstream ss(m[2].str());
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      args.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      invalid("population.preset '" + text + "' has a non-numeric argument");
    }
  }
  return {m[1].str(), args};
}

Population population_from_preset(const std::string& text, int n, double theta_init) {
  const auto [name, args] = split_preset(text);
  auto want = [&](std::size_t count) {
    if (args.size() != count) {
      invalid("population preset " + name + " takes " + std::to_string(count) + " argument(s)");
    }
  };
  if (name == "iid") {
    want(2);
    if (!(args[1] > 0.0)) invalid("iid population needs a positive variance");
    return iid_population(n, args[0], args[1], theta_init);
  }
  if (name == "hetero-variance") {
    want(1);
    return hetero_variance_population(n, args[0], theta_init);
  }
  if (name == "linear") {
    want(1);
    if (args[0] != static_cast<double>(n)) {
      invalid("population linear(" + std::to_string(static_cast<long long>(args[0])) +
              ") does not match topology n = " + std::to_string(n));
    }
    return linear_population(n, theta_init);
  }
  invalid("unknown population preset '" + name + "'");
}

Population parse_population(const json& p, int n, std::string& desc) {
  reject_unknown_keys(p, "population", {"preset", "theta_init", "blind", "agents"});
  std::vector<AgentProfile> agents;
  if (p.contains("preset") == p.contains("agents")) invalid("population needs exactly one of 'preset' or 'agents'");

  if (p.contains("preset")) {
    desc = get_required<std::string>(p, "preset", "population");
    const double theta_init = get_or<double>(p, "theta_init", 0.0, "population");
    agents = population_from_preset(desc, n, theta_init).profiles();
  } else {
    if (p.contains("theta_init")) invalid("population.theta_init only applies to presets");
    const json& list = p.at("agents");
    if (!list.is_array()) invalid("population.agents must be an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const json& a = list[i];
      const std::string where = "population.agents[" + std::to_string(i) + "]";
      reject_unknown_keys(a, where, {"theta", "variance", "precision", "theta_init"});
      if (a.contains("variance") == a.contains("precision")) {
        invalid(where + " needs exactly one of 'variance' or 'precision'");
      }
      AgentProfile agent;
      agent.theta_true = get_required<double>(a, "theta", where);
      agent.theta_init = get_or<double>(a, "theta_init", 0.0, where);
      if (a.contains("variance")) {
        const double var = get_required<double>(a, "variance", where);
        if (!(var > 0.0)) invalid(where + ".variance must be positive");
        agent.precision = 1.0 / var;
      } else {
        agent.precision = get_required<double>(a, "precision", where);
        if (!(agent.precision >= 0.0)) invalid(where + ".precision must be nonnegative");
      }
      agents.push_back(agent);
    }
    desc = "explicit(" + std::to_string(agents.size()) + " agents)";
  }

  if (p.contains("blind")) {
    const json& blind = p.at("blind");
    if (!blind.is_array()) invalid("population.blind must be an array of agent numbers");
    for (const json& b : blind) {
      if (!b.is_number_integer()) invalid("population.blind entries must be integers");
      const int idx = b.get<int>();
      if (idx < 1 || idx > static_cast<int>(agents.size())) {
        invalid("population.blind agent " + std::to_string(idx) + " out of range");
      }
      agents[idx - 1].precision = 0.0;
    }
    desc += " blind=" + blind.dump();
  }

  if (static_cast<int>(agents.size()) != n) {
    invalid("population has " + std::to_string(agents.size()) + " agents but topology has n = " + std::to_string(n));
  }
  try {
    return Population(std::move(agents));
  } catch (const std::invalid_argument& e) {
    invalid(e.what());
  }
}

AlgorithmSpec parse_algorithm(const json& a, const std::string& where) {
  reject_unknown_keys(a, where, {"kind", "tau_init_mode", "lwr_comm_precision", "lwr_comm_noise", "lwr_noise_scale"});
  AlgorithmSpec spec;
  const auto kind_name = get_required<std::string>(a, "kind", where);
  const auto kind = algorithm_kind_from_string(kind_name);
  if (!kind) invalid("unknown " + where + ".kind '" + kind_name + "'");
  spec.kind = *kind;

  const auto tau_mode = get_or<std::string>(a, "tau_init_mode", "paper", where);
  if (tau_mode == "paper") {
    spec.tau_init = TauInit::paper;
  } else if (tau_mode == "zero") {
    spec.tau_init = TauInit::zero;
  } else {
    invalid(where + ".tau_init_mode must be 'paper' or 'zero'");
  }

  spec.lwr_comm_precision = get_or<double>(a, "lwr_comm_precision", 1.0, where);
  spec.lwr_comm_noise = get_or<bool>(a, "lwr_comm_noise", true, where);
  const auto scale = get_or<std::string>(a, "lwr_noise_scale", "precision", where);
  if (scale == "precision") {
    spec.lwr_noise_scale = CommNoiseScale::precision;
  } else if (scale == "variance") {
    spec.lwr_noise_scale = CommNoiseScale::variance;
  } else {
    invalid(where + ".lwr_noise_scale must be 'precision' or 'variance'");
  }
  return spec;
}

std::pair<int, int> line_and_column(const std::string& text, std::size_t byte) {
  int line = 1;
  int col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

void validate_config(const ExperimentConfig& c) {
  if (c.horizon < 1) invalid("horizon must be >= 1");
  if (c.trials < 1) invalid("trials must be >= 1");
  if (c.output.stride < 1) invalid("output.stride must be >= 1");
  if (c.threads < 0) invalid("threads must be >= 0");
  if (c.algorithms.empty()) invalid("at least one algorithm is required");
  if (c.population.size() != c.graphs.n()) {
    invalid("population has " + std::to_string(c.population.size()) + " agents but topology has n = " +
            std::to_string(c.graphs.n()));
  }
  const bool any_blind = std::any_of(c.population.profiles().begin(), c.population.profiles().end(),
                                     [](const AgentProfile& a) { return a.blind(); });
  std::set<AlgorithmKind> seen;
  for (const AlgorithmSpec& a : c.algorithms) {
    if (!seen.insert(a.kind).second) invalid("algorithm " + to_string(a.kind) + " listed twice");
    if (a.kind != AlgorithmKind::proposed && any_blind) {
      invalid(to_string(a.kind) + " requires every agent to observe (no blind agents)");
    }
    if (a.kind == AlgorithmKind::lwr && !(a.lwr_comm_precision > 0.0)) {
      invalid("lwr_comm_precision must be positive");
    }
    if (a.kind == AlgorithmKind::biau) {
      if (!c.graphs.is_static()) invalid("biau requires a static topology");
      try {
        mixing_schedule(c.graphs, a);
      } catch (const std::invalid_argument& e) {
        invalid(std::string("biau requires doubly stochastic weights: ") + e.what());
      }
    }
  }
}

std::vector<WeightMatrix> mixing_schedule(const GraphSequence& graphs, const AlgorithmSpec& algo) {
  std::vector<WeightMatrix> out;
  for (const DirectedGraph& g : graphs.period()) {
    WeightMatrix w = build_weight_matrix(g);
    if (algo.kind == AlgorithmKind::biau && !w.is_doubly_stochastic()) w = lazy_metropolis_weights(g);
    out.push_back(std::move(w));
  }
  return out;
}

ExperimentConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_and_column(text, e.byte);
    throw ConfigParseError("config parse error at line " + std::to_string(line) + ", column " + std::to_string(col) +
                               ": " + e.what(),
                           line, col);
  }

  reject_unknown_keys(doc, "config",
                      {"name", "description", "topology", "population", "algorithm", "horizon", "trials",
                       "master_seed", "noise_enabled", "output_dir", "output", "threads"});

  ExperimentConfig c;
  c.name = get_or<std::string>(doc, "name", "", "config");
  c.description = get_or<std::string>(doc, "description", "", "config");

  if (!doc.contains("topology")) invalid("missing required key topology");
  c.topology = parse_topology(doc.at("topology"));
  try {
    c.graphs = generate_graph_sequence(c.topology);
  } catch (const std::invalid_argument& e) {
    invalid(std::string("topology: ") + e.what());
  }

  if (!doc.contains("population")) invalid("missing required key population");
  c.population = parse_population(doc.at("population"), c.graphs.n(), c.population_desc);

  if (!doc.contains("algorithm")) invalid("missing required key algorithm");
  const json& algos = doc.at("algorithm");
  c.algorithms.clear();
  if (algos.is_array()) {
    for (std::size_t i = 0; i < algos.size(); ++i) {
      c.algorithms.push_back(parse_algorithm(algos[i], "algorithm[" + std::to_string(i) + "]"));
    }
  } else {
    c.algorithms.push_back(parse_algorithm(algos, "algorithm"));
  }

  c.horizon = get_count(doc, "horizon", 0);
  if (!doc.contains("horizon")) invalid("missing required key horizon");
  c.trials = get_count(doc, "trials", 1);
  if (doc.contains("master_seed")) {
    const json& s = doc.at("master_seed");
    if (!s.is_number_integer() || (s.is_number_integer() && !s.is_number_unsigned() && s.get<std::int64_t>() < 0)) {
      invalid("master_seed must be a nonnegative 64-bit integer");
    }
    c.master_seed = s.get<std::uint64_t>();
  }
  c.noise_enabled = get_or<bool>(doc, "noise_enabled", true, "config");
  c.output_dir = get_or<std::string>(doc, "output_dir", "", "config");
  c.threads = static_cast<int>(get_count(doc, "threads", 0));
  if (doc.contains("output")) {
    const json& o = doc.at("output");
    reject_unknown_keys(o, "output", {"stride", "trajectory_trials"});
    c.output.stride = get_count(o, "stride", 1);
    c.output.trajectory_trials = get_count(o, "trajectory_trials", -1);
  }

  validate_config(c);
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace gaussnet
