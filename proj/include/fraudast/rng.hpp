#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace fraudast {

using Rng = std::mt19937_64;

/// splitmix64 step; used to spread a user seed into independent substream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Independent generator for substream `tag` of a master seed.
inline Rng substream(std::uint64_t seed, std::uint64_t tag) {
    return Rng(splitmix64(seed + 0x6a09e667f3bcc909ULL * tag));
}

// Draw helpers are hand-rolled rather than taken from <random> distributions:
// the standard distributions are implementation-defined, and run reports must
// be byte-identical for a fixed seed regardless of standard library version.

/// Uniform double in [0, 1).
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in (0, 1].
inline double uniform01_open_low(Rng& rng) {
    return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

/// Uniform index in [0, n). n must be > 0.
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
    // Rejection sampling to avoid modulo bias.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
    std::uint64_t x = rng();
    while (x > limit) x = rng();
    return static_cast<std::size_t>(x % n);
}

inline bool bernoulli(Rng& rng, double p) {
    return uniform01(rng) < p;
}

/// Standard normal via Box-Muller (one variate per call; no cached state).
inline double standard_normal(Rng& rng) {
    const double u1 = uniform01_open_low(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

inline double normal(Rng& rng, double mean, double stddev) {
    return mean + stddev * standard_normal(rng);
}

} // namespace fraudast
