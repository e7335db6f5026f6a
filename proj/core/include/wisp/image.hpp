#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace wisp {

/// Grayscale raster with double-precision samples in row-major order.
///
/// Sample values are nominally 8-bit gray levels (0..255). Intermediate
/// processing stages may leave that range freely; quantization to bytes
/// happens only when an image is written to disk.
class Image {
public:
    Image(int width, int height, double fill = 0.0);
    Image(int width, int height, std::vector<double> pixels);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t size() const noexcept { return pixels_.size(); }

    double operator()(int x, int y) const noexcept { return pixels_[index(x, y)]; }
    double& operator()(int x, int y) noexcept { return pixels_[index(x, y)]; }

    const std::vector<double>& pixels() const noexcept { return pixels_; }
    std::vector<double>& pixels() noexcept { return pixels_; }

private:
    std::size_t index(int x, int y) const noexcept {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

    int width_;
    int height_;
    std::vector<double> pixels_;
};

/// Axis-aligned rectangle in pixel coordinates, used for cropping.
struct PixelRect {
    int x0 = 0;
    int y0 = 0;
    int width = 1;
    int height = 1;
};

struct PadResult {
    Image image;
    int original_width;
    int original_height;
};

/// Replicates the last column and/or row once so both dimensions are even.
/// The original size is returned alongside so callers can crop back later.
PadResult pad_to_even(const Image& img);

/// Extracts the sub-image covered by `rect`. Throws if the rectangle is not
/// fully inside the image.
Image crop(const Image& img, const PixelRect& rect);

/// Clamps to [0,255] and rounds half away from zero. This is the one
/// quantization rule shared by file output, histogram binning and the
/// difference-entropy metric.
inline int gray_level(double v) {
    if (v <= 0.0) return 0;
    if (v >= 255.0) return 255;
    return static_cast<int>(std::lround(v));
}

}  // namespace wisp
