#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <doctest.h>

#include "gaussnet/config.hpp"
#include "gaussnet/experiment.hpp"
#include "gaussnet/seeding.hpp"
#include "test_support.hpp"

using namespace gaussnet;
using namespace gaussnet::testing;
namespace fs = std::filesystem;

namespace {

const std::string kSmall = R"json({
  "name": "small",
  "topology": {"kind": "path", "n": 4},
  "population": {"preset": "iid(1,2)", "theta_init": 0.5},
  "algorithm": [{"kind": "proposed"}, {"kind": "lwr", "lwr_comm_precision": 2.0}],
  "horizon": 40,
  "trials": 6,
  "master_seed": 77
})json";

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("gaussnet_test_" + name);
  fs::remove_all(d);
  return d;
}

std::string with(const std::string& doc, const std::string& from, const std::string& to) {
  std::string s = doc;
  const auto at = s.find(from);
  REQUIRE(at != std::string::npos);
  s.replace(at, from.size(), to);
  return s;
}

}  // namespace

TEST_CASE("config: grid preset fields") {
  const Preset* p = find_preset("fig1-grid25");
  REQUIRE(p != nullptr);
  const ExperimentConfig c = parse_config(p->document);
  CHECK(c.graphs.n() == 25);
  CHECK(c.graphs.at(0).edges().size() == 80);
  CHECK(c.population.size() == 25);
  CHECK(c.population[7].theta_true == 4.0);
  CHECK(c.population[7].precision == 1.0);
  REQUIRE(c.algorithms.size() == 2);
  CHECK(c.algorithms[0].kind == AlgorithmKind::proposed);
  CHECK(c.algorithms[1].kind == AlgorithmKind::lwr);
  CHECK(c.horizon == 10000);
  CHECK(c.trials == 500);
  CHECK(c.master_seed == 1);
  CHECK(c.noise_enabled);
}

TEST_CASE("config: every shipped preset parses") {
  CHECK(presets().size() >= 8);
  for (const Preset& p : presets()) {
    CAPTURE(p.name);
    CHECK_NOTHROW(parse_config(p.document));
  }
  CHECK(find_preset("no-such-preset") == nullptr);
}

TEST_CASE("config: explicit agents and options") {
  const ExperimentConfig c = parse_config(R"json({
    "topology": {"kind": "custom", "n": 3, "schedule": [[[1,2],[2,3]], [[3,1]]]},
    "population": {"agents": [{"theta": 1, "variance": 4}, {"theta": 2, "precision": 0}, {"theta": 3, "precision": 2, "theta_init": 9}]},
    "algorithm": {"kind": "proposed", "tau_init_mode": "zero"},
    "horizon": 5,
    "output": {"stride": 2}
  })json");
  CHECK(c.population[0].precision == 0.25);
  CHECK(c.population[1].blind());
  CHECK(c.population[2].theta_init == 9.0);
  CHECK(c.algorithms[0].tau_init == TauInit::zero);
  CHECK(c.graphs.period_length() == 2);
  CHECK(c.graphs.window() == 2);
  CHECK(c.output.stride == 2);
  CHECK(c.trials == 1);
}

TEST_CASE("config: validation errors") {
  CHECK_THROWS_AS(parse_config(with(kSmall, "\"trials\": 6", "\"trials\": 0")), ConfigValidationError);
  CHECK_THROWS_AS(parse_config(with(kSmall, "\"horizon\": 40", "\"horizon\": 0")), ConfigValidationError);
  CHECK_THROWS_AS(parse_config(with(kSmall, "\"horizon\": 40", "\"horizon\": 40, \"colour\": 1")),
                  ConfigValidationError);
  CHECK_THROWS_AS(parse_config(with(kSmall, "\"kind\": \"proposed\"", "\"kind\": \"gossip\"")), ConfigValidationError);
  CHECK_THROWS_AS(parse_config(with(kSmall, "{\"kind\": \"proposed\"}, ", "{\"kind\": \"lwr\"}, ")),
                  ConfigValidationError);

  std::string agents = "[";
  for (int i = 0; i < 24; ++i) agents += std::string(i ? "," : "") + "{\"theta\": 1, \"variance\": 1}";
  agents += "]";
  const std::string grid = R"json({
    "topology": {"kind": "grid", "rows": 5, "cols": 5, "n": 25},
    "population": {"agents": )json" + agents + R"json(},
    "algorithm": {"kind": "proposed"},
    "horizon": 10
  })json";
  CHECK_THROWS_AS(parse_config(grid), ConfigValidationError);

  // Running average needs non-blind agents and a usable matrix.
  CHECK_THROWS_AS(parse_config(R"json({
    "topology": {"kind": "ring-hub", "n": 5},
    "population": {"preset": "iid(0,1)"},
    "algorithm": {"kind": "biau"},
    "horizon": 10
  })json"),
                  ConfigValidationError);
  CHECK_THROWS_AS(parse_config(R"json({
    "topology": {"kind": "cycle", "n": 3},
    "population": {"preset": "iid(0,1)", "blind": [2]},
    "algorithm": {"kind": "biau"},
    "horizon": 10
  })json"),
                  ConfigValidationError);
  // A schedule whose union never becomes strongly connected.
  CHECK_THROWS_AS(parse_config(R"json({
    "topology": {"kind": "custom", "n": 3, "schedule": [[[1,2]], [[2,3]]]},
    "population": {"preset": "iid(0,1)"},
    "algorithm": {"kind": "proposed"},
    "horizon": 10
  })json"),
                  ConfigValidationError);
}

TEST_CASE("config: parse errors carry a location") {
  const std::string broken = "{\n  \"horizon\": 10,\n  \"trials\": ,\n}";
  try {
    parse_config(broken);
    FAIL("expected a parse error");
  } catch (const ConfigParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() >= 12);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), std::runtime_error);
}

TEST_CASE("seed derivation") {
  // SplitMix64 from state 0 produces 0xe220a8397b1dcdaf first.
  CHECK(mix64(0) == 0xe220a8397b1dcdafULL);
  CHECK(mix64(0x9e3779b97f4a7c15ULL) == 0x6e789e6aa1b965f4ULL);
  CHECK(derive_trial_seed(0, 0, 0) == mix64(mix64(mix64(0))));
  CHECK(observation_seed(5, 2, 3) != communication_seed(5, 2, 3));

  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t m = 0; m < 10000; ++m) seen.insert(derive_trial_seed(m, 0, 0));
  CHECK(seen.size() == 10000);
  seen.clear();
  for (std::uint64_t t = 0; t < 100; ++t)
    for (std::uint64_t a = 0; a < 100; ++a) seen.insert(derive_trial_seed(1, t, a));
  CHECK(seen.size() == 10000);
}

TEST_CASE("reference curve") {
  const auto c = emit_reference_curve(2.0, 1.0, 4);
  REQUIRE(c.size() == 4);
  CHECK(c[0] == 2.0);
  CHECK(c[1] == 1.0);
  CHECK(c[3] == 0.5);
  const auto h = emit_reference_curve(1.0, 0.5, 100);
  CHECK(h[99] == doctest::Approx(0.1));
  CHECK(emit_reference_curve(1.0, 1.0, 0).empty());
}

TEST_CASE("CSV formatting") {
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(format_real(2.0) == "2");
  CHECK(format_real(std::numeric_limits<double>::quiet_NaN()) == "nan");

  std::ostringstream out;
  BoundInputs b;
  b.init_l1 = 1.0;
  b.mean_l1 = 0.0;
  write_bound_csv(out, b, 2);
  CHECK(out.str() == "k,bound\n1,1\n2,0.5\n");

  std::ostringstream head;
  write_trajectory_header(head);
  CHECK(head.str() == "trial,k,agent,theta,tau\n");
}

TEST_CASE("output files are byte-identical across runs and thread counts") {
  ExperimentConfig c = parse_config(kSmall);
  c.output_dir = fresh_dir("a").string();
  c.threads = 1;
  run_experiment(c);
  c.output_dir = fresh_dir("b").string();
  run_experiment(c);
  c.output_dir = fresh_dir("c").string();
  c.threads = 4;
  run_experiment(c);

  for (const char* f : {"summary_proposed.csv", "summary_lwr.csv", "trajectory_proposed.csv", "trajectory_lwr.csv",
                        "bound.csv", "metadata.json"}) {
    CAPTURE(f);
    const std::string a = slurp(fs::temp_directory_path() / "gaussnet_test_a" / f);
    CHECK_FALSE(a.empty());
    CHECK(a == slurp(fs::temp_directory_path() / "gaussnet_test_b" / f));
    CHECK(a == slurp(fs::temp_directory_path() / "gaussnet_test_c" / f));
  }
  const std::string summary = slurp(fs::temp_directory_path() / "gaussnet_test_a" / "summary_proposed.csv");
  CHECK(summary.rfind("k,agent,mean_theta,mean_abs_error,abs_mean_error,std_theta,bound\n", 0) == 0);
  for (const char* d : {"a", "b", "c"}) fs::remove_all(fs::temp_directory_path() / ("gaussnet_test_" + std::string(d)));
}

TEST_CASE("trials depend only on their own index") {
  const ExperimentConfig c = parse_config(kSmall);
  ExperimentConfig more = c;
  more.trials = 60;
  for (const AlgorithmSpec& a : c.algorithms) {
    const auto x = run_trajectory(c, a, 5);
    const auto y = run_trajectory(more, a, 5);
    CHECK(x.theta == y.theta);
  }
  // Summaries from a manual fold in a different order agree to rounding.
  const double star = optimal_theta(c.population);
  SummaryAccumulator fwd(4, c.horizon, star), rev(4, c.horizon, star);
  for (std::int64_t t = 0; t < c.trials; ++t) fwd.add(run_trajectory(c, c.algorithms[0], t));
  for (std::int64_t t = c.trials - 1; t >= 0; --t) rev.add(run_trajectory(c, c.algorithms[0], t));
  CHECK((fwd.finish().mean_abs_error - rev.finish().mean_abs_error).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((fwd.finish().mean_theta - rev.finish().mean_theta).cwiseAbs().maxCoeff() <= 1e-12);

  const ExperimentResult r = run_experiment(c);
  CHECK(r.summaries[0].mean_theta == fwd.finish().mean_theta);
}
