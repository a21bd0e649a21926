#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "deptree/numeric.hpp"

namespace deptree {

/// Seeded pseudo-random stream. The engine is std::mt19937_64 and all
/// bounded draws use rejection sampling implemented here, so a given seed
/// yields the same sequence with every standard library.
class Rng {
public:
  static constexpr std::string_view algorithm = "mt19937_64";

  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  static Rng from_entropy() {
    std::random_device rd;
    const std::uint64_t seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    return Rng(seed);
  }

  /// Independent seed for sub-stream `stream` of `seed` (splitmix64 finaliser).
  static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). `bound` must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform integer in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  /// Uniform integer in [0, bound) for unbounded `bound` > 0.
  BigInt below(const BigInt& bound) {
    if (bound <= BigInt(UINT64_MAX)) return BigInt(below(static_cast<std::uint64_t>(bound)));
    const std::size_t bits = boost::multiprecision::msb(bound) + 1;
    while (true) {
      BigInt r = 0;
      std::size_t have = 0;
      while (have < bits) {
        r <<= 64;
        r |= engine_();
        have += 64;
      }
      r >>= (have - bits);
      if (r < bound) return r;
    }
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace deptree
