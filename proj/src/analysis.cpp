#include "gaussnet/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gaussnet {

double bound_eq9(std::int64_t k, const BoundInputs& b) {
  if (k < 1) throw std::invalid_argument("bound_eq9 needs k >= 1");
  // A zero heterogeneity term stays zero even if the gap underflowed.
  const double hetero = b.mean_l1 == 0.0 ? 0.0 : 2.0 * b.C * b.mean_l1 / b.lambda_gap;
  return b.tau_max / (b.tau_min * static_cast<double>(k) * b.delta) * (b.init_l1 + hetero);
}

BoundInputs bound_inputs_from(const Population& pop, const GraphConstants& gc) {
  const double theta_star = optimal_theta(pop);
  BoundInputs b;
  b.C = gc.C;
  b.lambda = gc.lambda;
  b.lambda_gap = gc.lambda_gap;
  b.delta = gc.delta;
  b.tau_max = 0.0;
  b.tau_min = std::numeric_limits<double>::infinity();
  for (const AgentProfile& a : pop.profiles()) {
    b.init_l1 += std::abs(a.theta_init - theta_star);
    if (a.blind()) continue;
    b.mean_l1 += std::abs(a.theta_true - theta_star);
    b.tau_max = std::max(b.tau_max, a.precision);
    b.tau_min = std::min(b.tau_min, a.precision);
  }
  return b;
}

std::vector<double> Summary::agent_mean(const Matrix& m) const {
  std::vector<double> out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) out[r] = m.row(r).mean();
  return out;
}

SummaryAccumulator::SummaryAccumulator(int n, std::int64_t horizon, double theta_star, std::int64_t stride)
    : n_(n), horizon_(horizon), theta_star_(theta_star) {
  if (n < 1 || horizon < 0 || stride < 1) throw std::invalid_argument("bad summary shape");
  for (std::int64_t k = 0; k <= horizon; k += stride) steps_.push_back(k);
  if (steps_.back() != horizon) steps_.push_back(horizon);
  const auto rows = static_cast<Eigen::Index>(steps_.size());
  mean_ = Matrix::Zero(rows, n);
  m2_ = Matrix::Zero(rows, n);
  abs_sum_ = Matrix::Zero(rows, n);
}

void SummaryAccumulator::add(const TrajectoryRecord& record) {
  if (record.n() != n_ || record.horizon() != horizon_) {
    throw std::invalid_argument("trajectory record shape does not match the summary");
  }
  ++count_;
  const double inv = 1.0 / static_cast<double>(count_);
  for (std::size_t r = 0; r < steps_.size(); ++r) {
    const auto row = static_cast<Eigen::Index>(r);
    const auto x = record.theta.row(steps_[r]).array();
    const Eigen::ArrayXXd before = x - mean_.row(row).array();
    mean_.row(row).array() += before * inv;
    m2_.row(row).array() += before * (x - mean_.row(row).array());
    abs_sum_.row(row).array() += (x - theta_star_).abs();
  }
}

Summary SummaryAccumulator::finish() const {
  if (count_ == 0) throw std::invalid_argument("summary of zero trials");
  Summary s;
  s.n = n_;
  s.trials = count_;
  s.steps = steps_;
  s.mean_theta = mean_;
  s.mean_abs_error = abs_sum_ / static_cast<double>(count_);
  s.abs_mean_error = (mean_.array() - theta_star_).abs().matrix();
  s.std_theta = Matrix::Zero(m2_.rows(), n_);
  if (count_ > 1) s.std_theta = (m2_ / static_cast<double>(count_ - 1)).cwiseSqrt();
  s.bound.assign(steps_.size(), std::numeric_limits<double>::quiet_NaN());
  s.meta.theta_star = theta_star_;
  return s;
}

Summary mc_mean_error(std::span<const TrajectoryRecord> records, double theta_star) {
  if (records.empty()) throw std::invalid_argument("mc_mean_error needs at least one record");
  SummaryAccumulator acc(records.front().n(), records.front().horizon(), theta_star);
  for (const TrajectoryRecord& r : records) acc.add(r);
  Summary s = acc.finish();
  s.meta.master_seed = records.front().master_seed;
  return s;
}

void attach_bound(Summary& summary, const BoundInputs& b) {
  for (std::size_t r = 0; r < summary.steps.size(); ++r) {
    summary.bound[r] =
        summary.steps[r] >= 1 ? bound_eq9(summary.steps[r], b) : std::numeric_limits<double>::quiet_NaN();
  }
}

double loglog_slope(std::span<const std::int64_t> steps, std::span<const double> values, std::int64_t k_lo,
                    std::int64_t k_hi) {
  if (steps.size() != values.size()) throw std::invalid_argument("loglog_slope: steps and values differ in length");
  if (k_lo < 1 || k_hi < 2 * k_lo) throw std::invalid_argument("loglog_slope needs 1 <= k_lo and k_hi >= 2 k_lo");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t m = 0;
  for (std::size_t r = 0; r < steps.size(); ++r) {
    if (steps[r] < k_lo || steps[r] > k_hi) continue;
    if (!(values[r] > 0.0)) throw std::invalid_argument("loglog_slope: nonpositive value in window");
    const double x = std::log(static_cast<double>(steps[r]));
    const double y = std::log(values[r]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) throw std::invalid_argument("loglog_slope: fewer than two points in window");
  const double md = static_cast<double>(m);
  return (md * sxy - sx * sy) / (md * sxx - sx * sx);
}

double loglog_slope(std::span<const double> curve, std::int64_t k_lo, std::int64_t k_hi) {
  if (k_hi >= static_cast<std::int64_t>(curve.size())) throw std::invalid_argument("loglog_slope: window past curve end");
  std::vector<std::int64_t> steps(curve.size());
  for (std::size_t k = 0; k < steps.size(); ++k) steps[k] = static_cast<std::int64_t>(k);
  return loglog_slope(steps, curve, k_lo, k_hi);
}

bool check_bound(const Summary& summary, const BoundInputs& b, double confidence_slack) {
  const double root_trials = std::sqrt(static_cast<double>(summary.trials));
  for (std::size_t r = 0; r < summary.steps.size(); ++r) {
    const std::int64_t k = summary.steps[r];
    if (k < 1) continue;
    const double bound = bound_eq9(k, b);
    const auto row = static_cast<Eigen::Index>(r);
    for (int i = 0; i < summary.n; ++i) {
      const double allowance = confidence_slack * summary.std_theta(row, i) / root_trials;
      if (!(summary.abs_mean_error(row, i) <= bound + allowance)) return false;
    }
  }
  return true;
}

}  // namespace gaussnet
