#include "wisp/histogram.hpp"

#include <algorithm>
#include <cmath>

namespace wisp {

std::array<std::uint64_t, 256> histogram256(const Image& img) {
    std::array<std::uint64_t, 256> counts{};
    for (double v : img.pixels()) {
        ++counts[static_cast<std::size_t>(gray_level(v))];
    }
    return counts;
}

Image equalize_ghe(const Image& img) {
    const auto counts = histogram256(img);
    const std::uint64_t total = static_cast<std::uint64_t>(img.size());

    std::array<std::uint64_t, 256> cdf{};
    std::uint64_t running = 0;
    std::uint64_t cdf_min = 0;
    for (int level = 0; level < 256; ++level) {
        running += counts[static_cast<std::size_t>(level)];
        cdf[static_cast<std::size_t>(level)] = running;
        if (cdf_min == 0 && running > 0) cdf_min = running;
    }

    if (total == cdf_min) return img;  // constant image, nothing to stretch

    std::array<double, 256> lut{};
    const double denom = static_cast<double>(total - cdf_min);
    for (int level = 0; level < 256; ++level) {
        const double numer =
            cdf[static_cast<std::size_t>(level)] > cdf_min
                ? static_cast<double>(cdf[static_cast<std::size_t>(level)] - cdf_min)
                : 0.0;
        const double mapped = std::llround(numer / denom * 255.0);
        lut[static_cast<std::size_t>(level)] = std::clamp(mapped, 0.0, 255.0);
    }

    Image out(img.width(), img.height());
    const auto& src = img.pixels();
    auto& dst = out.pixels();
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i] = lut[static_cast<std::size_t>(gray_level(src[i]))];
    }
    return out;
}

}  // namespace wisp
