#pragma once

#include "wisp/image.hpp"

namespace wisp {

struct MetricsReport {
    double mse = 0.0;
    double rmse = 0.0;
    double psnr_db = 0.0;  // +infinity when mse == 0
    double entropy_ref = 0.0;
    double entropy_test = 0.0;
};

/// Mean squared error over all pixels. Throws on size mismatch.
double mse(const Image& a, const Image& b);

/// 10*log10(r^2 / mse). Returns +infinity when the images are identical.
double psnr(const Image& a, const Image& b, double r = 255.0);

double rmse(const Image& a, const Image& b);

/// Shannon entropy (bits) of the horizontal adjacent-pixel differences.
///
/// Pixels are quantized with gray_level() first, then differences
/// p[r][c+1] - p[r][c] are collected over every row, giving
/// height*(width-1) samples in [-255,255]. Requires width >= 2.
double entropy_diff(const Image& img);

/// Bundles the metrics of `test` against the reference image.
MetricsReport compare(const Image& ref, const Image& test);

}  // namespace wisp
