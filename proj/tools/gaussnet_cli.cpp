// gaussnet: run distributed Gaussian estimation experiments.
//
//   gaussnet run --config <path|preset:name> [--out DIR] [--trials N] [--seed S] [--horizon K]
//   gaussnet check-graph --config <path|preset:name> [--horizon K]
//   gaussnet bound --config <path|preset:name> [--out FILE]
//   gaussnet presets [--show NAME]

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gaussnet/experiment.hpp"

using namespace gaussnet;

namespace {

ExperimentConfig load(const std::string& source) {
  constexpr std::string_view prefix = "preset:";
  if (source.starts_with(prefix)) {
    const std::string name = source.substr(prefix.size());
    const Preset* p = find_preset(name);
    if (!p) throw ConfigValidationError("no preset named '" + name + "'");
    return parse_config(p->document);
  }
  return load_config(source);
}

int cmd_run(const std::string& source, const std::optional<std::string>& out, std::optional<std::int64_t> trials,
            std::optional<std::uint64_t> seed, std::optional<std::int64_t> horizon) {
  ExperimentConfig config = load(source);
  if (out) config.output_dir = *out;
  if (trials) config.trials = *trials;
  if (seed) config.master_seed = *seed;
  if (horizon) config.horizon = *horizon;
  validate_config(config);

  const ExperimentResult result = run_experiment(config);
  std::printf("theta* = %s\n", format_real(result.theta_star).c_str());
  for (const Summary& s : result.summaries) {
    const auto mae = s.agent_mean(s.mean_abs_error);
    const auto ame = s.agent_mean(s.abs_mean_error);
    std::printf("%-9s k=%lld  mean |theta-theta*| = %.6g  |mean theta - theta*| = %.6g\n", s.meta.algorithm.c_str(),
                static_cast<long long>(s.steps.back()), mae.back(), ame.back());
  }
  if (!config.output_dir.empty()) std::printf("wrote %s\n", config.output_dir.c_str());
  return 0;
}

int cmd_check_graph(const std::string& source, std::int64_t horizon) {
  const ExperimentConfig config = load(source);
  const GraphSequence& g = config.graphs;
  const bool connected = validate_b_connectivity(g, g.window());
  const GraphConstants gc = graph_constants(g);
  std::printf("agents: %d  period: %zu  B: %d\n", g.n(), g.period_length(), g.window());
  std::printf("B-strongly connected: %s\n", connected ? "yes" : "no");
  std::printf("regular: %s\n", gc.regular ? "yes" : "no");
  std::printf("C = %s\nlambda = %s\n1 - lambda = %s\ndelta lower bound = %s\n", format_real(gc.C).c_str(),
              format_real(gc.lambda).c_str(), format_real(gc.lambda_gap).c_str(), format_real(gc.delta).c_str());
  std::printf("empirical delta (horizon %lld) = %s\n", static_cast<long long>(horizon),
              format_real(empirical_delta(g, horizon)).c_str());
  if (!connected) {
    std::fprintf(stderr, "error: schedule is not strongly connected over windows of B = %d\n", g.window());
    return 2;
  }
  return 0;
}

int cmd_bound(const std::string& source, const std::optional<std::string>& out) {
  const ExperimentConfig config = load(source);
  const BoundInputs b = bound_inputs_from(config.population, graph_constants(config.graphs));
  if (out) {
    std::ofstream file(*out, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot write " + *out);
    write_bound_csv(file, b, config.horizon);
  } else {
    write_bound_csv(std::cout, b, config.horizon);
  }
  return 0;
}

int cmd_presets(const std::optional<std::string>& show) {
  if (show) {
    const Preset* p = find_preset(*show);
    if (!p) throw ConfigValidationError("no preset named '" + *show + "'");
    std::cout << p->document;
    return 0;
  }
  for (const Preset& p : presets()) std::cout << p.name << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributed Gaussian parameter estimation over time-varying directed graphs"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::string> out;
  std::optional<std::int64_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> horizon;
  std::int64_t delta_horizon = 1000;
  std::optional<std::string> show;

  auto* run = app.add_subcommand("run", "Run a Monte Carlo experiment and write CSV files");
  run->add_option("--config", config_path, "Config file, or preset:<name>")->required();
  run->add_option("--out", out, "Output directory (overrides output_dir)");
  run->add_option("--trials", trials, "Monte Carlo trials");
  run->add_option("--seed", seed, "Master seed");
  run->add_option("--horizon", horizon, "Steps per trial");

  auto* check = app.add_subcommand("check-graph", "Validate connectivity and print mixing constants");
  check->add_option("--config", config_path, "Config file, or preset:<name>")->required();
  check->add_option("--horizon", delta_horizon, "Steps used for the empirical delta")->check(CLI::PositiveNumber);

  auto* bound = app.add_subcommand("bound", "Write the convergence bound curve as CSV");
  bound->add_option("--config", config_path, "Config file, or preset:<name>")->required();
  bound->add_option("--out", out, "Output file (default stdout)");

  auto* list = app.add_subcommand("presets", "List shipped scenarios");
  list->add_option("--show", show, "Print the named preset document");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(config_path, out, trials, seed, horizon);
    if (*check) return cmd_check_graph(config_path, delta_horizon);
    if (*bound) return cmd_bound(config_path, out);
    if (*list) return cmd_presets(show);
  } catch (const ConfigParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const ConfigValidationError& e) {
    std::fprintf(stderr, "error: invalid config: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
