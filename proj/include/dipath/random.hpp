#pragma once

// Seeded randomness with results that do not depend on the standard
// library's distribution implementations.

#include <cstdint>
#include <random>
#include <string_view>

namespace dipath {

using Rng = std::mt19937_64;

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Seed for the `index`-th independent stream under `base`.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b);

/// Uniform integer in [0, bound), bound > 0. Lemire's multiply-shift with
/// rejection.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Fair coin from the top bit of one draw.
inline bool coin(Rng& rng)
{
    return (rng() >> 63) != 0;
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double unit_interval(Rng& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);

} // namespace dipath
