#include "wisp/resample.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace wisp {

namespace {

// Keys cubic-convolution kernel with a = -0.5, support (-2, 2).
double keys_weight(double t) {
    t = std::abs(t);
    if (t <= 1.0) {
        return (1.5 * t - 2.5) * t * t + 1.0;
    }
    if (t < 2.0) {
        return ((-0.5 * t + 2.5) * t - 4.0) * t + 2.0;
    }
    return 0.0;
}

// Resamples every row of `img` from width w to nw; the column pass reuses
// this by transposing.
Image resize_rows(const Image& img, int nw, double factor) {
    const int w = img.width();
    const int h = img.height();
    Image out(nw, h);
    std::vector<double> weights(4);
    for (int dx = 0; dx < nw; ++dx) {
        const double sx = (dx + 0.5) / factor - 0.5;
        const int base = static_cast<int>(std::floor(sx));
        const double f = sx - base;
        weights[0] = keys_weight(f + 1.0);
        weights[1] = keys_weight(f);
        weights[2] = keys_weight(1.0 - f);
        weights[3] = keys_weight(2.0 - f);
        for (int y = 0; y < h; ++y) {
            double acc = 0.0;
            for (int t = 0; t < 4; ++t) {
                const int s = std::clamp(base - 1 + t, 0, w - 1);
                acc += weights[static_cast<std::size_t>(t)] * img(s, y);
            }
            out(dx, y) = acc;
        }
    }
    return out;
}

Image transpose(const Image& img) {
    Image out(img.height(), img.width());
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            out(y, x) = img(x, y);
        }
    }
    return out;
}

}  // namespace

Image bicubic_resize(const Image& img, double factor) {
    if (!(factor > 0.0)) {
        throw std::invalid_argument("bicubic_resize: factor must be positive, got " +
                                    std::to_string(factor));
    }
    const int nw = static_cast<int>(std::llround(img.width() * factor));
    const int nh = static_cast<int>(std::llround(img.height() * factor));
    if (nw < 1 || nh < 1) {
        throw std::invalid_argument("bicubic_resize: output would be empty");
    }
    Image rows = resize_rows(img, nw, factor);
    return transpose(resize_rows(transpose(rows), nh, factor));
}

Image bicubic_downscale_half(const Image& img) {
    if (img.width() % 2 != 0 || img.height() % 2 != 0) {
        throw std::invalid_argument("bicubic_downscale_half: dimensions must be even");
    }
    return bicubic_resize(img, 0.5);
}

}  // namespace wisp
