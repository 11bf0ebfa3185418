#pragma once

#include <cstdint>

namespace randwave {

/// SplitMix64 finalizer. Used as a stateless mixing function for counter-based
/// streams and for deriving independent per-sample seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed for stream `index` inside `domain` under `base`. Distinct domains give
/// disjoint streams for the same (base, index), e.g. signs vs. coefficient draws.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t domain,
                                    std::uint64_t index) {
  return splitmix64(splitmix64(base ^ splitmix64(domain)) + index);
}

namespace seed_domain {
inline constexpr std::uint64_t kSample = 0x5A4D'504C'4553ULL;
inline constexpr std::uint64_t kRademacher = 0x5241'4445'4D41ULL;
inline constexpr std::uint64_t kCoefficients = 0x434F'4546'4653ULL;
inline constexpr std::uint64_t kBootstrap = 0x424F'4F54'5354ULL;
}  // namespace seed_domain

}  // namespace randwave
