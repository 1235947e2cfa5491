// Gaussian observation model and the closed-form estimation quantities.

#ifndef GAUSSNET_MODELS_HPP
#define GAUSSNET_MODELS_HPP

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace gaussnet {

struct Gaussian {
  double mean = 0.0;
  double variance = 1.0;
};

/// One agent: local mean, observation precision (0 = blind) and the
/// initial estimate.
struct AgentProfile {
  double theta_true = 0.0;
  double precision = 1.0;
  double theta_init = 0.0;

  bool blind() const { return precision == 0.0; }
};

/// Ordered agents. At least one agent must observe.
class Population {
 public:
  explicit Population(std::vector<AgentProfile> profiles);

  int size() const { return static_cast<int>(profiles_.size()); }
  const AgentProfile& operator[](int i) const { return profiles_[i]; }
  const std::vector<AgentProfile>& profiles() const { return profiles_; }

 private:
  std::vector<AgentProfile> profiles_;
};

/// Every agent observes N(mean, variance).
Population iid_population(int n, double mean, double variance, double theta_init = 0.0);
/// Agent i (1-based) observes N(mean, i).
Population hetero_variance_population(int n, double mean, double theta_init = 0.0);
/// Agent i (1-based) observes N(i, n - i + 1).
Population linear_population(int n, double theta_init = 0.0);

/// KL(p || q) = log(s_q / s_p) + (s_p^2 + (m_p - m_q)^2) / (2 s_q^2) - 1/2.
double kl_gaussian(const Gaussian& p, const Gaussian& q);

/// sum_i tau_i (theta - theta_i)^2 / 2 over observing agents.
double objective(double theta, const Population& pop);

/// Precision-weighted mean of the local means; the unique minimizer of
/// `objective`.
double optimal_theta(const Population& pop);

/// Single-owner normal stream. One per (trial, agent, purpose).
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  double standard_normal() { return normal_(engine_); }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

enum class ObservationNoise { enabled, disabled };

/// theta_i + z / sqrt(tau_i), or exactly theta_i when noise is disabled.
/// Throws std::invalid_argument for blind agents.
double sample_observation(const AgentProfile& profile, RandomStream& rng,
                          ObservationNoise noise = ObservationNoise::enabled);

}  // namespace gaussnet

#endif  // GAUSSNET_MODELS_HPP
