#pragma once

#include <cstdint>

namespace glv {

// Deterministic, platform-independent generator for seeded test functions.
// std::uniform_real_distribution is implementation-defined, so sweeps that
// must produce byte-identical output across toolchains use this instead.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [-1, 1).
  double uniform_pm1() { return 2.0 * uniform01() - 1.0; }
};

// Stable case-key mixing so that parallel sweeps draw scheduling-independent
// streams: derive one seed per (global seed, integer key...) tuple.
inline std::uint64_t mix_seed(std::uint64_t seed) { return seed; }

template <typename... Rest>
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t key, Rest... rest) {
  SplitMix64 g(seed ^ (key + 0x632be59bd9b4e019ULL));
  return mix_seed(g.next(), static_cast<std::uint64_t>(rest)...);
}

}  // namespace glv
