#pragma once

#include "wisp/image.hpp"

namespace wisp {

/// Cubic-convolution resampling with the Keys kernel (a = -0.5).
///
/// Output size is round(width * factor) x round(height * factor). Sampling
/// uses pixel-center alignment, source = (dest + 0.5) / factor - 0.5, with
/// replicate extension at the borders. The kernel weights sum to 1, so
/// constant images are preserved and factor 1 is the identity.
Image bicubic_resize(const Image& img, double factor);

/// bicubic_resize with factor 0.5; requires even dimensions.
Image bicubic_downscale_half(const Image& img);

}  // namespace wisp
