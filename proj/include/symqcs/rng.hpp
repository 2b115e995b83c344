#pragma once

#include <cstdint>
#include <string>

#include "symqcs/scalar.hpp"

namespace symqcs {

/// Counter-based deterministic generator (splitmix64 core). Identical
/// (seed, draw sequence) pairs produce identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi] inclusive.
  long long uniform(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Small integer scalar in [-3, 3]; handy for seeded test data.
  Rat small_int() { return Rat(uniform(-3, 3)); }

  /// Derive an independent stream for a named subcase.
  Rng fork(const std::string& key) const {
    std::uint64_t h = 1469598103934665603ULL ^ state_;
    for (unsigned char c : key) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    return Rng(h);
  }

 private:
  std::uint64_t state_;
};

}  // namespace symqcs
