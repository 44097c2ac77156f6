#pragma once

// Counter-based deterministic pseudo-random generator.
//
//   value(seed, i) = mix(seed + (i + 1) * 0x9E3779B97F4A7C15)
//
// where mix is the SplitMix64 finalizer (two xor-shift/multiply rounds and a
// final xor-shift). Every random choice in this project is derived from an
// explicit (seed, counter) pair: no global state, identical output on every
// platform. The scheme is specified in docs/file-formats.md so external
// tools can re-derive any sample.

#include <cstdint>
#include <vector>

namespace palcheck {

class CounterRng {
 public:
  explicit CounterRng(uint64_t seed, uint64_t counter = 0)
      : seed_(seed), counter_(counter) {}

  static uint64_t value_at(uint64_t seed, uint64_t index) {
    uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  uint64_t next() { return value_at(seed_, counter_++); }

  // Uniform draw from [0, bound); bound >= 1. Rejection sampling: draws in
  // the top 2^64 mod bound values are discarded, so no modulo bias.
  uint64_t next_below(uint64_t bound) {
    const uint64_t rem = (0 - bound) % bound;  // 2^64 mod bound
    const uint64_t limit = 0 - rem;            // largest multiple of bound
    for (;;) {
      const uint64_t v = next();
      if (rem == 0 || v < limit) return v % bound;
    }
  }

  // In-place Fisher-Yates shuffle driven by next_below.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  uint64_t seed() const { return seed_; }
  uint64_t counter() const { return counter_; }

 private:
  uint64_t seed_;
  uint64_t counter_;
};

}  // namespace palcheck
