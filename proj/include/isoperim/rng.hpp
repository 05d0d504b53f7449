#pragma once

#include <cstdint>
#include <random>

namespace isoperim {

// Thin wrappers around mt19937_64 with hand-rolled draws. std::uniform_*
// distributions are implementation-defined, which would break the
// byte-identical-output contract across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform integer in [0, bound), bound >= 1. Rejection sampling, unbiased.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    for (;;) {
      std::uint64_t x = gen_();
      if (x < limit) return x % bound;
    }
  }

  int next_int(int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double next_real(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  bool next_bool() { return (gen_() & 1u) != 0; }

private:
  std::mt19937_64 gen_;
};

}  // namespace isoperim
