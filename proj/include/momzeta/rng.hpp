#pragma once

#include <cstdint>
#include <random>

namespace momzeta {

using engine_type = std::mt19937_64;

// SplitMix64 finalizer; decorrelates nearby (seed, index) pairs.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Generator for stream `index` of a run seeded with `seed`. Every trial
/// owns its stream, so results do not depend on how trials are scheduled.
inline engine_type stream_engine(std::uint64_t seed, std::uint64_t index) {
  return engine_type(mix64(seed ^ mix64(index + 0x632be59bd9b4e019ULL)));
}

/// Uniform double in [0, 1) with 53 random bits. Used instead of
/// std::uniform_real_distribution so output is identical across
/// standard library implementations.
template <class URBG>
double uniform01(URBG& g) {
  static_assert(URBG::max() - URBG::min() == ~std::uint64_t{0}, "needs a 64-bit generator");
  return static_cast<double>((g() - URBG::min()) >> 11) * 0x1.0p-53;
}

/// Uniform double in (0, 1).
template <class URBG>
double uniform01_open(URBG& g) {
  return (static_cast<double>((g() - URBG::min()) >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace momzeta
