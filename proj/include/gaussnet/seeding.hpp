#ifndef GAUSSNET_SEEDING_HPP
#define GAUSSNET_SEEDING_HPP

#include <cstdint>

namespace gaussnet {

/// SplitMix64 finalizer. A bijection on 64-bit words.
std::uint64_t mix64(std::uint64_t z);

/// Stream seed for (master, trial, agent):
///
///   mix64(mix64(mix64(master) ^ trial) ^ agent)
///
/// Each stage is a bijection, so the result is injective in any one
/// argument with the other two held fixed. This mapping is part of the
/// output format: changing it changes every published CSV.
std::uint64_t derive_trial_seed(std::uint64_t master, std::uint64_t trial, std::uint64_t agent);

/// Observation noise for `agent`.
inline std::uint64_t observation_seed(std::uint64_t master, std::uint64_t trial, std::uint64_t agent) {
  return derive_trial_seed(master, trial, agent);
}

/// Communication noise received by `agent` (lwr only). The high bit keeps
/// these streams disjoint from the observation streams.
inline std::uint64_t communication_seed(std::uint64_t master, std::uint64_t trial, std::uint64_t agent) {
  return derive_trial_seed(master, trial, agent | (std::uint64_t{1} << 63));
}

}  // namespace gaussnet

#endif  // GAUSSNET_SEEDING_HPP
