#ifndef COVPACK_RNG_HPP
#define COVPACK_RNG_HPP

#include <cstdint>

namespace covpack {

/// Counter-based generator: the k-th draw for a given seed is a pure function
/// of (seed, k), so streams are reproducible across platforms and can be
/// split without shared state. Mixing function is splitmix64.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t counter = 0)
      : seed_(seed), counter_(counter) {}

  static std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Derives an independent stream; tag values must differ between call sites.
  CounterRng split(std::uint64_t tag) const { return CounterRng(mix(seed_, tag ^ 0xA5A5A5A5A5A5A5A5ull)); }

  std::uint64_t next_u64() { return mix(seed_, counter_++); }

  /// Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double next_range(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

}  // namespace covpack

#endif  // COVPACK_RNG_HPP
