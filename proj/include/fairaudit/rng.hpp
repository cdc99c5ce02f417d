#pragma once

// Deterministic, splittable RNG used everywhere randomness is needed.
// SplitMix64 core; substreams are derived by hashing (seed, stream index)
// so parallel loops stay schedule-independent and bit-reproducible.
// https://prng.di.unimi.it/splitmix64.c

#include <cmath>
#include <cstdint>

namespace fairaudit {

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed for the `stream`-th independent substream of a master seed.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix64(seed + 0x9e3779b97f4a7c15ULL * (stream + 1));
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  // uniform in [0,1), 53-bit resolution
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_double() < p; }

  // uniform integer in [0, bound), Lemire multiply-shift
  std::uint64_t uniform_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  // standard normal via Box-Muller; the second variate is discarded
  double normal() {
    double u1 = 1.0 - next_double();  // (0,1], keeps log() finite
    double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

 private:
  std::uint64_t state_;
};

}  // namespace fairaudit
