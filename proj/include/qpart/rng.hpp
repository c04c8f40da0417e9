#pragma once

#include <cstdint>
#include <random>

// Seeded, reproducible randomness. std::mt19937_64 is fully specified by
// the standard; the distribution helpers here are hand-rolled because the
// standard library distributions are implementation-defined, which would
// break byte-identical reruns across toolchains.

namespace qpart::rng {

inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Independent stream for (seed, trial); trial t does not depend on how many
// trials run.
inline std::mt19937_64 trial_stream(uint64_t seed, uint64_t trial) {
  uint64_t s = seed;
  uint64_t a = splitmix64(s);
  s = a ^ (trial * 0xD1B54A32D192ED03ull + 0x632BE59BD9B4E019ull);
  return std::mt19937_64(splitmix64(s));
}

// uniform integer in [0, bound) by rejection
inline uint64_t uniform_below(std::mt19937_64& g, uint64_t bound) {
  if (bound == 0) return 0;
  uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % bound) - 1;
  uint64_t x;
  do {
    x = g();
  } while (x > limit);
  return x % bound;
}

// uniform double in [0, 1) with 53 random bits
inline double uniform01(std::mt19937_64& g) {
  return double(g() >> 11) * 0x1.0p-53;
}

}  // namespace qpart::rng
