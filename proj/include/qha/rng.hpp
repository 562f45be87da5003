#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

#include "qha/types.hpp"

namespace qha {

/// Stateless counter-based randomness: every value is a pure function of
/// (seed, counter words), so batch draws are bit-identical under any
/// parallel schedule.
namespace rng {

/// splitmix64 finalizer.
inline std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t key(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                         std::uint64_t c = 0) {
    std::uint64_t k = mix(seed);
    k = mix(k ^ a);
    k = mix(k ^ b);
    return mix(k ^ c);
}

/// Uniform in (0, 1], 53-bit resolution.
inline double uniform(std::uint64_t k) {
    return (static_cast<double>(k >> 11) + 1.0) * 0x1.0p-53;
}

/// Standard complex Gaussian sample (unit-variance real and imaginary
/// parts) keyed by (seed, a, b, c); Box-Muller on two derived uniforms.
inline Complex gaussian(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                        std::uint64_t c = 0) {
    const std::uint64_t k = key(seed, a, b, c);
    const double u1 = uniform(k);
    const double u2 = uniform(mix(k ^ 0xd1b54a32d192ed03ULL));
    const double r = std::sqrt(-2.0 * std::log(u1));
    return {r * std::cos(2.0 * kPi * u2), r * std::sin(2.0 * kPi * u2)};
}

}  // namespace rng
}  // namespace qha
