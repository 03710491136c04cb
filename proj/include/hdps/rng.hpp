#ifndef HDPS_RNG_HPP_
#define HDPS_RNG_HPP_

#include <cstdint>
#include <random>

namespace hdps::rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stream tags keep logically distinct consumers of one seed on
// uncorrelated engine states.
inline constexpr std::uint64_t kCoefficientStream = 0x636f6566ULL;   // weak-index placement
inline constexpr std::uint64_t kDatasetStream = 0x64617461ULL;       // covariates + noise
inline constexpr std::uint64_t kMcShardStreamBase = 0x71756e74ULL;   // MC quantile shards
inline constexpr std::uint64_t kReplicationMcStream = 0x726d6371ULL; // per-replication MC seed

inline std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream));
}

inline std::mt19937_64 engine(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(derive(seed, stream));
}

}  // namespace hdps::rng

#endif  // HDPS_RNG_HPP_
