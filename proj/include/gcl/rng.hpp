#pragma once

#include <cstdint>

#include "gcl/rational.hpp"

namespace gcl {

/// SplitMix64: the fixed 64-bit generator used throughout. Pure integer
/// arithmetic, so streams are bit-identical across platforms for a given
/// seed. Constants are the standard ones (Steele, Lea, Flood 2014).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, n) by rejection-free modulo of a fresh draw;
  /// bias is negligible for the small n used here but we reject the top
  /// sliver to keep draws exactly uniform.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % n;
  }

  /// Exact dyadic rational in [0, 1): draw / 2^64.
  Rational unit_rational() {
    Rational r(BigInt(static_cast<unsigned long>(next())), bigint_pow(2, 64));
    r.canonicalize();
    return r;
  }

 private:
  std::uint64_t state_;
};

}  // namespace gcl
