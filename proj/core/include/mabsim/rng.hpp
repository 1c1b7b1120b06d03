#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace mabsim {

// All randomness flows through one engine type so a 64-bit seed reproduces a
// run bit-for-bit on a given build.
using Rng = std::mt19937_64;

// SplitMix64 finalizer; turns correlated seed material into well-mixed words.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives the seed of an independent substream from (master, tag, index).
// Uses FNV-1a for the tag so the result is stable across platforms (std::hash
// is not).
constexpr std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                                    std::uint64_t index = 0) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : tag) {
    h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  }
  return splitmix64(splitmix64(master ^ h) + index);
}

inline Rng make_rng(std::uint64_t seed) { return Rng(splitmix64(seed)); }

inline Rng make_rng(std::uint64_t master, std::string_view tag,
                    std::uint64_t index = 0) {
  return Rng(derive_seed(master, tag, index));
}

// Cumulative-weight inverse draw over integer weights. Exactly unbiased:
// picks index i with probability weights[i] / sum(weights). At least one
// weight must be positive.
int sample_weighted(std::span<const int> weights, Rng& rng);

// Same draw over real weights (used for pmfs and softmax weights). Weights
// must be non-negative with a positive sum.
int sample_weighted(std::span<const double> weights, Rng& rng);

}  // namespace mabsim
