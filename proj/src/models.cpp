#include "gaussnet/models.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gaussnet {

Population::Population(std::vector<AgentProfile> profiles) : profiles_(std::move(profiles)) {
  if (profiles_.empty()) throw std::invalid_argument("population is empty");
  bool any_observer = false;
  for (std::size_t i = 0; i < profiles_.size(); ++i) {
    const AgentProfile& p = profiles_[i];
    if (!(p.precision >= 0.0) || !std::isfinite(p.precision)) {
      throw std::invalid_argument("agent " + std::to_string(i + 1) + " has an invalid precision");
    }
    if (!std::isfinite(p.theta_true) || !std::isfinite(p.theta_init)) {
      throw std::invalid_argument("agent " + std::to_string(i + 1) + " has a non-finite mean or initial guess");
    }
    any_observer = any_observer || p.precision > 0.0;
  }
  if (!any_observer) throw std::invalid_argument("population has no agent with positive precision");
}

Population iid_population(int n, double mean, double variance, double theta_init) {
  if (n < 1 || !(variance > 0.0)) throw std::invalid_argument("iid population needs n >= 1 and variance > 0");
  return Population(std::vector<AgentProfile>(n, AgentProfile{mean, 1.0 / variance, theta_init}));
}

Population hetero_variance_population(int n, double mean, double theta_init) {
  if (n < 1) throw std::invalid_argument("population needs n >= 1");
  std::vector<AgentProfile> agents;
  for (int i = 1; i <= n; ++i) agents.push_back({mean, 1.0 / i, theta_init});
  return Population(std::move(agents));
}

Population linear_population(int n, double theta_init) {
  if (n < 1) throw std::invalid_argument("population needs n >= 1");
  std::vector<AgentProfile> agents;
  for (int i = 1; i <= n; ++i) agents.push_back({static_cast<double>(i), 1.0 / (n - i + 1), theta_init});
  return Population(std::move(agents));
}

double kl_gaussian(const Gaussian& p, const Gaussian& q) {
  if (!(p.variance > 0.0) || !(q.variance > 0.0)) throw std::invalid_argument("KL needs positive variances");
  const double diff = p.mean - q.mean;
  return 0.5 * std::log(q.variance / p.variance) + (p.variance + diff * diff) / (2.0 * q.variance) - 0.5;
}

double objective(double theta, const Population& pop) {
  double f = 0.0;
  for (const AgentProfile& a : pop.profiles()) {
    const double d = theta - a.theta_true;
    f += 0.5 * a.precision * d * d;
  }
  return f;
}

double optimal_theta(const Population& pop) {
  double num = 0.0;
  double den = 0.0;
  for (const AgentProfile& a : pop.profiles()) {
    num += a.precision * a.theta_true;
    den += a.precision;
  }
  if (!(den > 0.0)) throw std::invalid_argument("optimal parameter undefined: every agent is blind");
  return num / den;
}

double sample_observation(const AgentProfile& profile, RandomStream& rng, ObservationNoise noise) {
  if (profile.blind()) throw std::invalid_argument("blind agents do not observe");
  if (noise == ObservationNoise::disabled) return profile.theta_true;
  return profile.theta_true + rng.standard_normal() / std::sqrt(profile.precision);
}

}  // namespace gaussnet
