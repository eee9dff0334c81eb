// Deterministic PRNG stack: splitmix64 for seeding/stream derivation and
// xoshiro256** as the workhorse generator. Both are the public-domain
// algorithms from http://prng.di.unimi.it/ specified bit-exactly, so any
// implementation in any language reproduces the same streams.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace karma {

inline constexpr std::uint64_t kSplitmix64Gamma = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// One-word generator; state advances by the golden-ratio gamma per draw.
class Splitmix64 {
 public:
  explicit Splitmix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() { return splitmix64_mix(state_ += kSplitmix64Gamma); }

 private:
  std::uint64_t state_;
};

// The tag-th output of splitmix64 seeded with `master`, computed in O(1).
// Used everywhere a child seed is derived from (master seed, stream tag);
// distinct tags give independent streams.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag) {
  return splitmix64_mix(master + (tag + 1) * kSplitmix64Gamma);
}

inline std::uint64_t rotl64(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

// xoshiro256**, state seeded from four successive splitmix64 outputs.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed) {
    Splitmix64 sm(seed);
    for (auto& w : state_) w = sm.next();
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl64(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl64(state_[3], 45);
    return result;
  }

  // Uniform in [0,1), 53 significant bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in (0,1]; safe as a log() argument.
  double uniform_open() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound). Plain modulo: the bias is irrelevant at
  // our scales and the reduction is trivially portable.
  std::uint64_t bounded(std::uint64_t bound) { return next() % bound; }

  // Box-Muller without the cached spare, so consumption is always exactly
  // two draws per variate.
  double normal() {
    const double u1 = uniform_open();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
  }

 private:
  std::array<std::uint64_t, 4> state_;
};

}  // namespace karma
