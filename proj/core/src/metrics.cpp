#include "wisp/metrics.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace wisp {

namespace {

void require_same_size(const Image& a, const Image& b) {
    if (a.width() != b.width() || a.height() != b.height()) {
        throw std::invalid_argument("metrics: image sizes do not match");
    }
}

}  // namespace

double mse(const Image& a, const Image& b) {
    require_same_size(a, b);
    double sum = 0.0;
    const auto& pa = a.pixels();
    const auto& pb = b.pixels();
    for (std::size_t i = 0; i < pa.size(); ++i) {
        const double d = pa[i] - pb[i];
        sum += d * d;
    }
    return sum / static_cast<double>(pa.size());
}

double psnr(const Image& a, const Image& b, double r) {
    if (!(r > 0.0)) {
        throw std::invalid_argument("psnr: peak value must be positive");
    }
    const double err = mse(a, b);
    if (err == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(r * r / err);
}

double rmse(const Image& a, const Image& b) { return std::sqrt(mse(a, b)); }

double entropy_diff(const Image& img) {
    if (img.width() < 2) {
        throw std::invalid_argument("entropy_diff: image must be at least 2 pixels wide");
    }
    std::array<std::uint64_t, 511> counts{};  // difference range -255..255
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x + 1 < img.width(); ++x) {
            const int d = gray_level(img(x + 1, y)) - gray_level(img(x, y));
            ++counts[static_cast<std::size_t>(d + 255)];
        }
    }
    const double total = static_cast<double>(img.height()) * (img.width() - 1);
    double entropy = 0.0;
    for (std::uint64_t c : counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / total;
        entropy -= p * std::log2(p);
    }
    return entropy;
}

MetricsReport compare(const Image& ref, const Image& test) {
    MetricsReport report;
    report.mse = mse(ref, test);
    report.rmse = std::sqrt(report.mse);
    report.psnr_db = report.mse == 0.0 ? std::numeric_limits<double>::infinity()
                                       : 10.0 * std::log10(255.0 * 255.0 / report.mse);
    report.entropy_ref = entropy_diff(ref);
    report.entropy_test = entropy_diff(test);
    return report;
}

}  // namespace wisp
