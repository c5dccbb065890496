#pragma once

#include <cstdint>
#include <vector>

#include "bcfw/rational.hpp"

namespace bcfw {

// The one PRNG of the project, part of the external reproducibility
// contract: splitmix64 with the usual constants. Every run is a pure
// function of the 64-bit seed, so results are identical across platforms
// and reimplementable in any language.
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Positive rational with numerator and denominator uniform in [1, 100],
  // reduced. Generic enough to avoid accidental vanishing while keeping
  // bit sizes small.
  Rat rational() {
    long num = 1 + static_cast<long>(below(100));
    long den = 1 + static_cast<long>(below(100));
    return rat_of(num, den);
  }

  std::vector<Rat> rationals(std::size_t count) {
    std::vector<Rat> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(rational());
    return out;
  }

 private:
  std::uint64_t state_;
};

// Derives independent sub-seeds, so that e.g. per-cell sampling does not
// depend on iteration order.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
  SplitMix64 g(seed ^ (0x6C62272E07BB0142ULL + tag * 0x27D4EB2F165667C5ULL));
  return g.next();
}

}  // namespace bcfw
