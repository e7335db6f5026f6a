#pragma once

#include <cstdint>

#include "wisp/image.hpp"

namespace wisp {

enum class NoiseKind { salt_pepper };

/// Impulse-noise parameters. `density` is the per-pixel corruption
/// probability; the generator and draw order are fixed (see add_salt_pepper)
/// so the same seed reproduces the same noise everywhere.
struct NoiseSpec {
    NoiseKind kind = NoiseKind::salt_pepper;
    double density = 0.05;
    std::uint64_t seed = 0;
};

/// Corrupts each pixel independently with probability `spec.density`; a
/// corrupted pixel becomes 0 or 255 with equal probability.
///
/// Determinism contract: pixels are visited in row-major order; each pixel
/// consumes one SplitMix64 draw for the corruption decision and, only when
/// corrupted, one more for the polarity. Equal seeds give bit-identical
/// output on every platform.
Image add_salt_pepper(const Image& img, const NoiseSpec& spec);

/// Replaces each pixel by the median of the kernel x kernel window centered
/// on it, with replicate extension at the borders. `kernel` must be odd,
/// >= 3 and at most min(width, height).
Image median_filter(const Image& img, int kernel);

}  // namespace wisp
