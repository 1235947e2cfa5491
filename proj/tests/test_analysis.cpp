#include <cmath>
#include <limits>
#include <random>

#include <doctest.h>

#include "gaussnet/analysis.hpp"
#include "gaussnet/trajectory.hpp"
#include "test_support.hpp"

using namespace gaussnet;
using namespace gaussnet::testing;

namespace {

BoundInputs sample_inputs() {
  BoundInputs b;
  b.tau_max = 1.0;
  b.tau_min = 1.0;
  b.delta = 1.0;
  b.C = std::sqrt(2.0);
  b.lambda = 63.0 / 64.0;
  b.lambda_gap = 1.0 / 64.0;
  b.init_l1 = 2.0;
  b.mean_l1 = 1.0;
  return b;
}

TrajectoryRecord constant_record(std::int64_t trial, int n, std::int64_t horizon, double value) {
  TrajectoryRecord r;
  r.trial = trial;
  r.theta = Matrix::Constant(horizon + 1, n, value);
  r.tau = Matrix::Ones(horizon + 1, n);
  return r;
}

}  // namespace

TEST_CASE("convergence bound") {
  const BoundInputs b = sample_inputs();
  CHECK(bound_eq9(1, b) == doctest::Approx(2.0 + 128.0 * std::sqrt(2.0)));
  CHECK(bound_eq9(1, b) == doctest::Approx(183.019336).epsilon(1e-8));
  CHECK(bound_eq9(2, b) == doctest::Approx(bound_eq9(1, b) / 2.0));
  CHECK(bound_eq9(1000, b) == doctest::Approx(bound_eq9(1, b) / 1000.0));

  BoundInputs zero = b;
  zero.init_l1 = 0.0;
  zero.mean_l1 = 0.0;
  CHECK(bound_eq9(7, zero) == 0.0);

  BoundInputs skewed = b;
  skewed.tau_max = 4.0;
  skewed.delta = 0.5;
  CHECK(bound_eq9(1, skewed) == doctest::Approx(8.0 * bound_eq9(1, b)));

  CHECK_THROWS_AS(bound_eq9(0, b), std::invalid_argument);
  CHECK_THROWS_AS(bound_eq9(-3, b), std::invalid_argument);
}

TEST_CASE("bound inputs from a population") {
  // theta* = (0 * 1 + 2 * 4) / 5 = 1.6; the blind agent only enters init_l1.
  const Population pop({{0.0, 1.0, 0.0}, {2.0, 4.0, 0.0}, {100.0, 0.0, 5.0}});
  GraphConstants gc;
  gc.C = 4.0;
  gc.lambda = 0.5;
  gc.lambda_gap = 0.5;
  gc.delta = 0.25;
  const BoundInputs b = bound_inputs_from(pop, gc);
  CHECK(b.tau_max == 4.0);
  CHECK(b.tau_min == 1.0);
  CHECK(b.init_l1 == doctest::Approx(1.6 + 1.6 + 3.4));
  CHECK(b.mean_l1 == doctest::Approx(1.6 + 0.4));
  CHECK(b.C == 4.0);
  CHECK(b.delta == 0.25);
  CHECK(b.lambda_gap == 0.5);
}

TEST_CASE("property: bound is monotone, homogeneous and translation invariant") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int t = 0; t < 200; ++t) {
    BoundInputs b;
    b.tau_max = u(rng);
    b.tau_min = b.tau_max / u(rng);
    b.delta = 1.0 / u(rng);
    b.C = u(rng);
    b.lambda_gap = 1.0 / (1.0 + u(rng));
    b.lambda = 1.0 - b.lambda_gap;
    b.init_l1 = u(rng);
    b.mean_l1 = u(rng);
    for (std::int64_t k = 1; k < 50; ++k) {
      CHECK(bound_eq9(k + 1, b) < bound_eq9(k, b));
      CHECK(bound_eq9(k, b) * static_cast<double>(k) == doctest::Approx(bound_eq9(1, b)).epsilon(1e-12));
    }
  }
  for (int t = 0; t < 50; ++t) {
    const Population pop = random_population(2 + t % 6, rng, true);
    const double shift = std::uniform_real_distribution<double>(-50.0, 50.0)(rng);
    std::vector<AgentProfile> moved = pop.profiles();
    for (auto& a : moved) {
      a.theta_true += shift;
      a.theta_init += shift;
    }
    const GraphConstants gc = lemma1_constants(pop.size(), 1, false);
    const BoundInputs a = bound_inputs_from(pop, gc);
    const BoundInputs b = bound_inputs_from(Population(moved), gc);
    CHECK(bound_eq9(10, a) == doctest::Approx(bound_eq9(10, b)).epsilon(1e-9));
  }
}

TEST_CASE("Monte Carlo error curves") {
  SUBCASE("single trial") {
    TrajectoryRecord r = constant_record(0, 2, 2, 0.0);
    r.theta << 0.0, 1.0,  //
        2.0, 3.0,         //
        1.0, 1.0;
    const Summary s = mc_mean_error(std::span<const TrajectoryRecord>(&r, 1), 1.0);
    CHECK(s.trials == 1);
    CHECK(s.steps == std::vector<std::int64_t>{0, 1, 2});
    CHECK(s.mean_abs_error(0, 0) == 1.0);
    CHECK(s.mean_abs_error(1, 1) == 2.0);
    CHECK(s.abs_mean_error(1, 0) == 1.0);
    CHECK(s.mean_abs_error(2, 0) == 0.0);
    CHECK(s.std_theta.isZero());
  }
  SUBCASE("symmetric pairs cancel in the mean only") {
    std::vector<TrajectoryRecord> rs{constant_record(0, 3, 4, 2.5), constant_record(1, 3, 4, -0.5)};
    const Summary s = mc_mean_error(rs, 1.0);
    CHECK(s.abs_mean_error.isZero());
    CHECK(s.mean_abs_error.isApproxToConstant(1.5));
    CHECK(s.std_theta.isApproxToConstant(1.5 * std::sqrt(2.0)));
    CHECK(s.mean_theta.isApproxToConstant(1.0));
  }
  SUBCASE("identical records equal the single-record summary") {
    std::mt19937_64 rng(3);
    TrajectoryRecord r = constant_record(0, 4, 30, 0.0);
    for (Eigen::Index i = 0; i < r.theta.size(); ++i) r.theta.data()[i] = std::normal_distribution<double>()(rng);
    const std::vector<TrajectoryRecord> many(7, r);
    const Summary one = mc_mean_error(std::span<const TrajectoryRecord>(&r, 1), 0.3);
    const Summary seven = mc_mean_error(many, 0.3);
    CHECK((one.mean_abs_error - seven.mean_abs_error).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK((one.abs_mean_error - seven.abs_mean_error).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK(seven.std_theta.cwiseAbs().maxCoeff() <= 1e-12);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(mc_mean_error(std::span<const TrajectoryRecord>(), 0.0), std::invalid_argument);
    std::vector<TrajectoryRecord> rs{constant_record(0, 3, 4, 0.0), constant_record(1, 2, 4, 0.0)};
    CHECK_THROWS_AS(mc_mean_error(rs, 0.0), std::invalid_argument);
  }
}

TEST_CASE("strided accumulation keeps the final step") {
  SummaryAccumulator acc(2, 25, 0.0, 10);
  acc.add(constant_record(0, 2, 25, 1.0));
  const Summary s = acc.finish();
  CHECK(s.steps == std::vector<std::int64_t>{0, 10, 20, 25});
  CHECK(s.mean_theta.rows() == 4);
}

TEST_CASE("log-log slope") {
  std::vector<double> inv(1001), inv_sqrt(1001);
  for (int k = 1; k <= 1000; ++k) {
    inv[k] = 3.0 / k;
    inv_sqrt[k] = 0.7 / std::sqrt(static_cast<double>(k));
  }
  CHECK(loglog_slope(inv, 10, 1000) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(loglog_slope(inv_sqrt, 100, 1000) == doctest::Approx(-0.5).epsilon(1e-12));

  const std::vector<std::int64_t> steps{1, 10, 100, 1000};
  const std::vector<double> values{5.0, 0.5, 0.05, 0.005};
  CHECK(loglog_slope(steps, values, 1, 1000) == doctest::Approx(-1.0));
  CHECK(loglog_slope(steps, values, 10, 100) == doctest::Approx(-1.0));

  CHECK_THROWS_AS(loglog_slope(inv, 600, 1000), std::invalid_argument);
  CHECK_THROWS_AS(loglog_slope(steps, values, 11, 99), std::invalid_argument);
  std::vector<double> with_zero = inv;
  with_zero[500] = 0.0;
  CHECK_THROWS_AS(loglog_slope(with_zero, 100, 1000), std::invalid_argument);
}

TEST_CASE("noise-free directed 3-cycle decays at rate 1/k") {
  std::vector<AgentProfile> agents{{1.0, 1.0, 0.0}, {2.0, 2.0, 0.0}, {6.0, 0.5, 0.0}};
  AlgorithmSpec proposed;
  const auto cfg = make_config(topo(TopologyKind::cycle, 3), Population(agents), {proposed}, 1000, 1, 0, false);
  const auto rec = run_trajectory(cfg, proposed, 0);
  const double star = optimal_theta(cfg.population);
  std::vector<double> err(1001);
  for (int k = 0; k <= 1000; ++k) err[k] = (rec.theta.row(k).array() - star).abs().maxCoeff();
  const double slope = loglog_slope(err, 100, 1000);
  CHECK(slope >= -1.3);
  CHECK(slope <= -0.7);
}

TEST_CASE("bound check") {
  const std::vector<TrajectoryRecord> near{constant_record(0, 2, 50, 1.0), constant_record(1, 2, 50, 1.0)};
  Summary s = mc_mean_error(near, 1.0);
  BoundInputs tight;
  tight.init_l1 = 0.0;
  tight.mean_l1 = 0.0;
  CHECK(check_bound(s, tight, 0.0));

  // Negative control: a persistent offset of 1 exceeds 2/k beyond k = 2.
  const std::vector<TrajectoryRecord> off{constant_record(0, 2, 50, 2.0), constant_record(1, 2, 50, 2.0)};
  Summary bad = mc_mean_error(off, 1.0);
  BoundInputs b;
  b.init_l1 = 2.0;
  b.mean_l1 = 0.0;
  CHECK_FALSE(check_bound(bad, b, 3.0));

  attach_bound(s, b);
  CHECK(std::isnan(s.bound[0]));
  CHECK(s.bound[1] == doctest::Approx(2.0));
  CHECK(s.bound[50] == doctest::Approx(2.0 / 50.0));
}
