#ifndef MODFO_PRNG_HPP
#define MODFO_PRNG_HPP

#include <cstdint>

namespace modfo {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen for cross-language
// reproducibility: the state is a single 64-bit word seeded directly, and
// the constants below are the published ones. Bounded draws use plain
// modulo reduction; streams are part of the tool's stable output format.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [0, n) via modulo; n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
  std::uint64_t state_;
};

}  // namespace modfo

#endif
