#ifndef ANGLERIG_RNG_HPP
#define ANGLERIG_RNG_HPP

#include <cstdint>
#include <string_view>

namespace anglerig {

// splitmix64. Used everywhere instead of <random> so that seeded runs are
// byte-identical across standard libraries and platforms.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % bound;
  }

  // Uniform integer in [-bound, bound].
  long long symmetric(long long bound) {
    return static_cast<long long>(below(2 * static_cast<std::uint64_t>(bound) + 1)) - bound;
  }
};

std::uint64_t fnv1a64(std::string_view text);

// Stable per-task seed derivation for deterministic parallel runs.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0);

} // namespace anglerig

#endif
