#pragma once

#include <array>
#include <cstdint>

#include "wisp/image.hpp"

namespace wisp {

/// Counts pixels per gray level. Pixels are binned with gray_level()
/// (clamp to [0,255], round half away from zero); the image is not modified.
std::array<std::uint64_t, 256> histogram256(const Image& img);

/// Global histogram equalization.
///
/// Each pixel is binned with gray_level() and remapped to
///   round((cdf(v) - cdf_min) / (N - cdf_min) * 255)
/// where cdf is the cumulative histogram, cdf_min its smallest non-zero
/// value and N the pixel count. A constant image (N == cdf_min) is
/// returned unchanged. Output pixels are integers in [0,255].
Image equalize_ghe(const Image& img);

}  // namespace wisp
