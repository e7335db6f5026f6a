#include "wisp/filters.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "wisp/rng.hpp"

namespace wisp {

Image add_salt_pepper(const Image& img, const NoiseSpec& spec) {
    if (spec.kind != NoiseKind::salt_pepper) {
        throw std::invalid_argument("add_salt_pepper: unsupported noise kind");
    }
    if (spec.density < 0.0 || spec.density > 1.0) {
        throw std::invalid_argument("add_salt_pepper: density must be in [0,1], got " +
                                    std::to_string(spec.density));
    }
    Image out = img;
    SplitMix64 rng(spec.seed);
    for (double& p : out.pixels()) {
        if (rng.next_double() < spec.density) {
            p = (rng.next() >> 63) ? 255.0 : 0.0;
        }
    }
    return out;
}

Image median_filter(const Image& img, int kernel) {
    if (kernel < 3 || kernel % 2 == 0) {
        throw std::invalid_argument("median_filter: kernel must be odd and >= 3, got " +
                                    std::to_string(kernel));
    }
    if (kernel > std::min(img.width(), img.height())) {
        throw std::invalid_argument("median_filter: kernel " + std::to_string(kernel) +
                                    " exceeds image extent");
    }

    const int w = img.width();
    const int h = img.height();
    const int r = kernel / 2;
    Image out(w, h);
    std::vector<double> window(static_cast<std::size_t>(kernel) * static_cast<std::size_t>(kernel));

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            std::size_t n = 0;
            for (int dy = -r; dy <= r; ++dy) {
                const int sy = std::clamp(y + dy, 0, h - 1);
                for (int dx = -r; dx <= r; ++dx) {
                    const int sx = std::clamp(x + dx, 0, w - 1);
                    window[n++] = img(sx, sy);
                }
            }
            auto mid = window.begin() + static_cast<std::ptrdiff_t>(n / 2);
            std::nth_element(window.begin(), mid, window.begin() + static_cast<std::ptrdiff_t>(n));
            out(x, y) = *mid;
        }
    }
    return out;
}

}  // namespace wisp
