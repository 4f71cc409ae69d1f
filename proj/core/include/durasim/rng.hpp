#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace durasim {

// Deterministic, platform-independent random streams. std:: distributions
// are implementation-defined, so draws are built directly from raw 64-bit
// outputs; identical seeds give bit-identical trajectories everywhere.

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Stream seed for trajectory `index` under `master_seed`. Mixing both words
/// through splitmix64 keeps streams decorrelated for adjacent indices.
inline std::uint64_t derive_stream_seed(std::uint64_t master_seed,
                                        std::uint64_t index) {
  std::uint64_t s = master_seed;
  std::uint64_t a = splitmix64(s);
  s ^= index * 0xD1B54A32D192ED03ULL;
  return a ^ splitmix64(s);
}

/// xoshiro256++ seeded via splitmix64.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) word = splitmix64(s);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Exponential with the given mean; mean may be +inf (never fires).
  double exponential(double mean) {
    if (std::isinf(mean)) {
      next();  // keep the draw count state-independent of the mean
      return std::numeric_limits<double>::infinity();
    }
    return -mean * std::log1p(-uniform01());
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t state_[4];
};

}  // namespace durasim
