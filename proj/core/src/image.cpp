#include "wisp/image.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace wisp {

Image::Image(int width, int height, double fill)
    : width_(width), height_(height) {
    if (width < 1 || height < 1) {
        throw std::invalid_argument("Image: dimensions must be positive, got " +
                                    std::to_string(width) + "x" + std::to_string(height));
    }
    pixels_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

Image::Image(int width, int height, std::vector<double> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    if (width < 1 || height < 1) {
        throw std::invalid_argument("Image: dimensions must be positive, got " +
                                    std::to_string(width) + "x" + std::to_string(height));
    }
    if (pixels_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
        throw std::invalid_argument("Image: pixel buffer size does not match dimensions");
    }
}

PadResult pad_to_even(const Image& img) {
    const int w = img.width();
    const int h = img.height();
    const int pw = w + (w % 2);
    const int ph = h + (h % 2);
    if (pw == w && ph == h) {
        return PadResult{img, w, h};
    }
    Image out(pw, ph);
    for (int y = 0; y < ph; ++y) {
        const int sy = y < h ? y : h - 1;
        for (int x = 0; x < pw; ++x) {
            const int sx = x < w ? x : w - 1;
            out(x, y) = img(sx, sy);
        }
    }
    return PadResult{std::move(out), w, h};
}

Image crop(const Image& img, const PixelRect& rect) {
    if (rect.width < 1 || rect.height < 1 || rect.x0 < 0 || rect.y0 < 0 ||
        rect.x0 + rect.width > img.width() || rect.y0 + rect.height > img.height()) {
        throw std::invalid_argument("crop: rectangle out of bounds");
    }
    Image out(rect.width, rect.height);
    for (int y = 0; y < rect.height; ++y) {
        for (int x = 0; x < rect.width; ++x) {
            out(x, y) = img(rect.x0 + x, rect.y0 + y);
        }
    }
    return out;
}

}  // namespace wisp
