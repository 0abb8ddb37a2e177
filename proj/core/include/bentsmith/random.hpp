#pragma once

#include <cstdint>
#include <random>

namespace bentsmith {

/// The only source of randomness used by the library. Streams are owned by
/// exactly one run and never shared between threads.
using RandomStream = std::mt19937_64;

/// SplitMix64 finalizer; maps (base, index) to a well-mixed 64-bit seed so
/// that neighbouring run indices get unrelated streams.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept
{
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Uniform integer in [lo, hi].
template <typename Int>
Int uniform_int(RandomStream& rng, Int lo, Int hi)
{
    return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

inline bool coin(RandomStream& rng, double p = 0.5)
{
    return std::bernoulli_distribution(p)(rng);
}

}  // namespace bentsmith
