#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace roadgraph {

// All randomness in the toolkit flows from one named root seed through
// explicit derived streams. No std::random engines or distributions are
// used anywhere, so every sequence is stable across platforms and builds.

inline uint64_t splitmix64(uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline uint64_t hash_str(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

// PCG32: small, fast, reproducible.
class Rng {
 public:
  Rng() : Rng(0x853c49e6748fea9bull, 0xda3e39cb94b95bdbull) {}
  Rng(uint64_t init_state, uint64_t init_seq) {
    state_ = 0u;
    inc_ = (init_seq << 1u) | 1u;
    next_u32();
    state_ += init_state;
    next_u32();
  }

  uint32_t next_u32() {
    uint64_t old = state_;
    state_ = old * 6364136223846793005ull + inc_;
    uint32_t xorshifted = static_cast<uint32_t>(((old >> 18u) ^ old) >> 27u);
    uint32_t rot = static_cast<uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((-rot) & 31u));
  }

  // Uniform in [0,1).
  double uniform() { return next_u32() * (1.0 / 4294967296.0); }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Unbiased integer in [0, bound).
  uint32_t uniform_int(uint32_t bound) {
    if (bound <= 1) return 0;
    uint32_t threshold = (-bound) % bound;
    for (;;) {
      uint32_t r = next_u32();
      if (r >= threshold) return r % bound;
    }
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Box-Muller, no state caching: two u32 draws per sample.
  double normal(double mean = 0.0, double stddev = 1.0) {
    double u1 = (next_u32() + 1.0) * (1.0 / 4294967297.0);  // (0,1)
    double u2 = next_u32() * (1.0 / 4294967296.0);
    double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(2.0 * M_PI * u2);
  }

 private:
  uint64_t state_;
  uint64_t inc_;
};

// Derives an independent stream from a root seed and a path of labels,
// e.g. derive_rng(seed, "synth", sample_index).
inline Rng derive_rng(uint64_t seed, std::string_view purpose, uint64_t index = 0) {
  uint64_t s = seed;
  uint64_t a = splitmix64(s) ^ hash_str(purpose);
  uint64_t b = splitmix64(s) ^ (index * 0x9E3779B97F4A7C15ull + 0x1234567);
  uint64_t t = a ^ (b << 1);
  uint64_t st = splitmix64(t);
  uint64_t sq = splitmix64(t);
  return Rng(st, sq);
}

}  // namespace roadgraph
