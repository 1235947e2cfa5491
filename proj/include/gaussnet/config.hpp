// Experiment configuration documents.
//
// A config is a JSON object. Recognised keys (anything else is rejected):
//
//   name            string, used in metadata
//   description     string, free text
//   topology        {kind, n, rows, cols, directed, hub_fanout, schedule, B, validate}
//   population      {preset, theta_init, blind} or {agents: [{theta, variance|precision, theta_init}]}
//   algorithm       one object or an array of
//                   {kind, tau_init_mode, lwr_comm_precision, lwr_comm_noise, lwr_noise_scale}
//   horizon         steps K >= 1
//   trials          Monte Carlo trials >= 1
//   master_seed     unsigned 64-bit integer
//   noise_enabled   bool
//   output_dir      string; empty disables file output
//   output          {stride, trajectory_trials}
//   threads         worker threads, 0 = hardware concurrency
//
// Agent numbers in `blind` and `schedule` are 1-based.

#ifndef GAUSSNET_CONFIG_HPP
#define GAUSSNET_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaussnet/algorithms.hpp"
#include "gaussnet/graphs.hpp"
#include "gaussnet/models.hpp"

namespace gaussnet {

/// Malformed document. `line` and `column` are 1-based; 0 when unknown.
class ConfigParseError : public std::runtime_error {
 public:
  ConfigParseError(const std::string& what, int line, int column)
      : std::runtime_error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Well-formed document that violates a constraint.
class ConfigValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OutputOptions {
  /// Summary and trajectory rows are written for k % stride == 0 and k = K.
  std::int64_t stride = 1;
  /// Number of leading trials dumped to the trajectory CSV; -1 = all.
  std::int64_t trajectory_trials = -1;
};

struct ExperimentConfig {
  std::string name;
  std::string description;
  TopologySpec topology;
  GraphSequence graphs{{DirectedGraph(1, {})}, 1};
  std::string population_desc;
  Population population{{AgentProfile{}}};
  std::vector<AlgorithmSpec> algorithms{AlgorithmSpec{}};
  std::int64_t horizon = 1;
  std::int64_t trials = 1;
  std::uint64_t master_seed = 0;
  bool noise_enabled = true;
  std::string output_dir;
  OutputOptions output;
  int threads = 0;
};

/// Parses and validates. Throws ConfigParseError or ConfigValidationError.
ExperimentConfig parse_config(const std::string& text);

/// Reads `path` and parses it.
ExperimentConfig load_config(const std::string& path);

/// Re-checks the cross-field constraints; used after CLI overrides.
void validate_config(const ExperimentConfig& config);

/// Mixing matrix used by `algo` at every slot of the schedule.
/// proposed: out-degree weights; biau: the out-degree weights when they are
/// doubly stochastic, lazy Metropolis weights otherwise; lwr: unused.
std::vector<WeightMatrix> mixing_schedule(const GraphSequence& graphs, const AlgorithmSpec& algo);

/// Shipped scenario documents.
struct Preset {
  std::string name;
  std::string document;
};
const std::vector<Preset>& presets();
const Preset* find_preset(const std::string& name);

}  // namespace gaussnet

#endif  // GAUSSNET_CONFIG_HPP
