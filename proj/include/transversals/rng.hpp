#pragma once

// Seeded generator with portable draws. std::uniform_*_distribution output
// differs between standard libraries, so the few draws we need are spelled
// out on top of the (fully specified) mt19937_64 sequence.

#include <cstdint>
#include <random>

namespace transversals {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform() < p; }

  /// Uniform in [0, bound), bound > 0, without modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  template <class It>
  void shuffle(It first, It last) {
    for (auto n = last - first; n > 1; --n) {
      std::swap(first[n - 1], first[static_cast<std::ptrdiff_t>(below(static_cast<std::uint64_t>(n)))]);
    }
  }

  /// Independent stream for sub-task `stream`, derived from the root seed only.
  Rng split(std::uint64_t stream) const { return Rng(mix(seed_ + 0x9e3779b97f4a7c15ULL * (stream + 1))); }

 private:
  // splitmix64 finalizer
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace transversals
