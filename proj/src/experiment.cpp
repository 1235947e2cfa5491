#include "gaussnet/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <thread>

#include <json.hpp>

namespace gaussnet {

namespace fs = std::filesystem;

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_summary_csv(std::ostream& out, const Summary& s) {
  out << "k,agent,mean_theta,mean_abs_error,abs_mean_error,std_theta,bound\n";
  for (std::size_t r = 0; r < s.steps.size(); ++r) {
    const auto row = static_cast<Eigen::Index>(r);
    for (int i = 0; i < s.n; ++i) {
      out << s.steps[r] << ',' << i + 1 << ',' << format_real(s.mean_theta(row, i)) << ','
          << format_real(s.mean_abs_error(row, i)) << ',' << format_real(s.abs_mean_error(row, i)) << ','
          << format_real(s.std_theta(row, i)) << ',' << format_real(s.bound[r]) << '\n';
    }
  }
}

void write_trajectory_header(std::ostream& out) { out << "trial,k,agent,theta,tau\n"; }

void write_trajectory_rows(std::ostream& out, const TrajectoryRecord& rec, std::int64_t stride) {
  const std::int64_t horizon = rec.horizon();
  for (std::int64_t k = 0; k <= horizon; ++k) {
    if (k % stride != 0 && k != horizon) continue;
    for (int i = 0; i < rec.n(); ++i) {
      out << rec.trial << ',' << k << ',' << i + 1 << ',' << format_real(rec.theta(k, i)) << ','
          << format_real(rec.tau(k, i)) << '\n';
    }
  }
}

void write_bound_csv(std::ostream& out, const BoundInputs& b, std::int64_t horizon) {
  out << "k,bound\n";
  for (std::int64_t k = 1; k <= horizon; ++k) out << k << ',' << format_real(bound_eq9(k, b)) << '\n';
}

std::vector<double> emit_reference_curve(double c, double p, std::int64_t horizon) {
  std::vector<double> curve;
  curve.reserve(static_cast<std::size_t>(std::max<std::int64_t>(horizon, 0)));
  for (std::int64_t k = 1; k <= horizon; ++k) curve.push_back(c * std::pow(static_cast<double>(k), -p));
  return curve;
}

namespace {

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

std::string describe(const TopologySpec& t, const GraphSequence& g) {
  std::string s = to_string(t.kind) + "(n=" + std::to_string(g.n());
  if (t.kind == TopologyKind::grid) s += ", " + std::to_string(t.rows) + "x" + std::to_string(t.cols);
  if (t.kind == TopologyKind::cycle) s += t.directed ? ", directed" : ", bidirectional";
  return s + ", period=" + std::to_string(g.period_length()) + ", B=" + std::to_string(g.window()) + ")";
}

void write_metadata(const fs::path& path, const ExperimentConfig& c, const ExperimentResult& r) {
  nlohmann::ordered_json meta;
  meta["name"] = c.name;
  meta["topology"] = describe(c.topology, c.graphs);
  meta["population"] = c.population_desc;
  meta["theta_init"] = nlohmann::ordered_json::array();
  for (const AgentProfile& a : c.population.profiles()) meta["theta_init"].push_back(a.theta_init);
  meta["algorithms"] = nlohmann::ordered_json::array();
  for (const AlgorithmSpec& a : c.algorithms) meta["algorithms"].push_back(to_string(a.kind));
  meta["horizon"] = c.horizon;
  meta["trials"] = c.trials;
  meta["master_seed"] = c.master_seed;
  meta["noise_enabled"] = c.noise_enabled;
  meta["theta_star"] = format_real(r.theta_star);
  meta["C"] = format_real(r.constants.C);
  meta["lambda"] = format_real(r.constants.lambda);
  meta["lambda_gap"] = format_real(r.constants.lambda_gap);
  meta["delta"] = format_real(r.constants.delta);
  meta["regular"] = r.constants.regular;
  auto out = open_output(path);
  out << meta.dump(2) << '\n';
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  validate_config(config);

  ExperimentResult result;
  result.theta_star = optimal_theta(config.population);
  result.constants = graph_constants(config.graphs);
  result.bound_inputs = bound_inputs_from(config.population, result.constants);

  const bool write = !config.output_dir.empty();
  const fs::path dir(config.output_dir);
  if (write) fs::create_directories(dir);

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const auto workers = static_cast<std::int64_t>(config.threads > 0 ? static_cast<unsigned>(config.threads) : hw);
  const std::int64_t dump_trials =
      config.output.trajectory_trials < 0 ? config.trials : std::min(config.trials, config.output.trajectory_trials);

  for (const AlgorithmSpec& algo : config.algorithms) {
    SummaryAccumulator acc(config.population.size(), config.horizon, result.theta_star, config.output.stride);
    std::optional<std::ofstream> traj;
    if (write && dump_trials > 0) {
      traj.emplace(open_output(dir / ("trajectory_" + to_string(algo.kind) + ".csv")));
      write_trajectory_header(*traj);
    }

    std::vector<TrajectoryRecord> batch;
    for (std::int64_t first = 0; first < config.trials; first += workers) {
      const std::int64_t count = std::min(workers, config.trials - first);
      batch.assign(static_cast<std::size_t>(count), TrajectoryRecord{});
      if (count == 1) {
        batch[0] = run_trajectory(config, algo, first);
      } else {
        std::vector<std::jthread> pool;
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
        for (std::int64_t w = 0; w < count; ++w) {
          pool.emplace_back([&, w] {
            try {
              batch[w] = run_trajectory(config, algo, first + w);
            } catch (...) {
              errors[w] = std::current_exception();
            }
          });
        }
        pool.clear();
        for (const auto& e : errors) {
          if (e) std::rethrow_exception(e);
        }
      }
      // Fold in trial order regardless of which worker finished first.
      for (const TrajectoryRecord& rec : batch) {
        acc.add(rec);
        if (traj && rec.trial < dump_trials) write_trajectory_rows(*traj, rec, config.output.stride);
      }
    }

    Summary summary = acc.finish();
    summary.meta = {describe(config.topology, config.graphs), to_string(algo.kind), config.population_desc,
                    config.master_seed, result.theta_star};
    attach_bound(summary, result.bound_inputs);
    if (write) {
      auto out = open_output(dir / ("summary_" + to_string(algo.kind) + ".csv"));
      write_summary_csv(out, summary);
    }
    result.summaries.push_back(std::move(summary));
  }

  if (write) {
    auto out = open_output(dir / "bound.csv");
    write_bound_csv(out, result.bound_inputs, config.horizon);
    write_metadata(dir / "metadata.json", config, result);
  }
  return result;
}

}  // namespace gaussnet
