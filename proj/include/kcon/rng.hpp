#pragma once

#include <cstdint>

namespace kcon {

// xorshift64* (Vigna 2014): shifts 12/25/27, multiplier 0x2545F4914F6CDD1D.
// The state is seeded through one splitmix64 step so that every seed,
// including 0, gives a non-zero state. Version 1 of the generator; any change
// to constants or seeding must bump kRngVersion.
class Xorshift64Star {
public:
  static constexpr int kRngVersion = 1;

  explicit Xorshift64Star(std::uint64_t seed) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    state_ = z ^ (z >> 31);
    if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
  }

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  // Uniform double in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [lo, hi]; modulo bias is irrelevant at these ranges.
  int between(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool bernoulli(double p) { return uniform() < p; }

private:
  std::uint64_t state_;
};

}  // namespace kcon
