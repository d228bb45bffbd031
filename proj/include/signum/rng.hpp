#ifndef SIGNUM_RNG_HPP
#define SIGNUM_RNG_HPP

#include <cstdint>

namespace signum {

/// SplitMix64: the portable generator behind every seeded matrix family.
/// Chosen so that traces reproduce bit-for-bit across implementations;
/// documented in the file-format section of the README.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 bits of precision.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, bound).
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

}  // namespace signum

#endif  // SIGNUM_RNG_HPP
