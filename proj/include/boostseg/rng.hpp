#pragma once

#include <cstdint>
#include <string>

#include "boostseg/common.hpp"

namespace boostseg {

// Counter-based PRNG. Every stream is a pure function of (global seed, stream
// name, counter), so any run -- or any reimplementation in another language --
// reproduces the same draws byte for byte. The recipe:
//
//   key     = fnv1a64(name) XOR mix64(seed)
//   word(i) = mix64(key + (i + 1) * 0x9E3779B97F4A7C15)       (SplitMix64 mix)
//   uniform(i) = (word(i) >> 11) * 2^-53                      in [0, 1)
//   normal(i)  = sum of uniform(12 i .. 12 i + 11) - 6        (Irwin-Hall 12)
//
// The Irwin-Hall normal has exact mean 0 and variance 1 and needs no libm
// transcendentals, which keeps draws identical across IEEE-754 platforms.
class Rng {
 public:
  Rng(uint64_t seed, const std::string& stream_name)
      : key_(fnv1a64(stream_name) ^ mix64(seed)) {}

  static uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  uint64_t word_at(uint64_t counter) const {
    return mix64(key_ + (counter + 1) * 0x9E3779B97F4A7C15ULL);
  }

  double uniform_at(uint64_t counter) const {
    return static_cast<double>(word_at(counter) >> 11) * 0x1.0p-53;
  }

  double normal_at(uint64_t counter) const {
    double s = 0.0;
    for (uint64_t k = 0; k < 12; ++k) s += uniform_at(counter * 12 + k);
    return s - 6.0;
  }

  // Sequential draws for call sites that do not care about the counter.
  uint64_t next_word() { return word_at(next_++); }
  double next_uniform() { return uniform_at(next_++); }
  double next_normal() { return normal_at(next_++); }
  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_uniform(); }
  // Uniform integer in [lo, hi], inclusive.
  int64_t next_int(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(next_word() % static_cast<uint64_t>(hi - lo + 1));
  }

 private:
  uint64_t key_;
  uint64_t next_ = 0;
};

}  // namespace boostseg
