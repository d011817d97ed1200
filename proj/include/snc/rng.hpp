#pragma once

#include <cstdint>
#include <random>

namespace snc {

/// Seeded pseudorandom stream: std::mt19937_64 (fully specified by the C++
/// standard, so identical on every platform), with unbiased range reduction
/// done here rather than by the implementation-defined distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  bool bit() { return (engine_() >> 63) != 0; }

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

  template <typename Vec>
  void shuffle(Vec& v) {
    for (std::size_t k = v.size(); k > 1; --k) {
      std::swap(v[k - 1], v[below(k)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Seed of the instance with the given index inside a seeded batch.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return seed ^ index;
}

/// SplitMix64 finalizer; decorrelates sub-streams drawn from one seed.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace snc
