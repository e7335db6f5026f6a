#pragma once

#include <cstdint>

namespace wisp {

/// SplitMix64 pseudo-random generator (Steele, Lea & Flood, 2014).
///
/// Chosen over std::mt19937_64 because the standard library's distribution
/// adaptors are implementation-defined; this generator plus the explicit
/// draw rules below give bit-identical streams on every platform.
///
///   next()        : z = (state += 0x9E3779B97F4A7C15)
///                   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///                   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///                   return z ^ (z >> 31)
///   next_double() : (next() >> 11) * 2^-53, uniform in [0, 1)
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) using the high 53 bits.
    constexpr double next_double() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

}  // namespace wisp
