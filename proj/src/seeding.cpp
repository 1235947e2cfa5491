#include "gaussnet/seeding.hpp"

namespace gaussnet {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_trial_seed(std::uint64_t master, std::uint64_t trial, std::uint64_t agent) {
  return mix64(mix64(mix64(master) ^ trial) ^ agent);
}

}  // namespace gaussnet
