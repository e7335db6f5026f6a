#include "wisp/wavelet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wisp {

namespace {

std::vector<double> reversed(std::vector<double> v) {
    std::reverse(v.begin(), v.end());
    return v;
}

// High-pass as the quadrature mirror of the low-pass: g[j] = (-1)^j h[L-1-j].
std::vector<double> mirror_highpass(const std::vector<double>& lo) {
    const std::size_t len = lo.size();
    std::vector<double> hi(len);
    for (std::size_t j = 0; j < len; ++j) {
        hi[j] = (j % 2 == 0 ? 1.0 : -1.0) * lo[len - 1 - j];
    }
    return hi;
}

WaveletSpec from_lowpass(std::string name, std::vector<double> lo) {
    WaveletSpec spec;
    spec.name = std::move(name);
    spec.analysis_lo = lo;
    spec.analysis_hi = mirror_highpass(lo);
    spec.synthesis_lo = reversed(spec.analysis_lo);
    spec.synthesis_hi = reversed(spec.analysis_hi);
    spec.dc_gain_1d = std::accumulate(lo.begin(), lo.end(), 0.0);
    return spec;
}

// Decimated analysis of one line: out[k] = sum_j f[j] line[(2k+j) mod n].
void analyze_line(const double* line, int n, const std::vector<double>& lo,
                  const std::vector<double>& hi, double* out_lo, double* out_hi) {
    const int len = static_cast<int>(lo.size());
    for (int k = 0; k < n / 2; ++k) {
        double a = 0.0, d = 0.0;
        for (int j = 0; j < len; ++j) {
            const double x = line[(2 * k + j) % n];
            a += lo[j] * x;
            d += hi[j] * x;
        }
        out_lo[k] = a;
        out_hi[k] = d;
    }
}

// Undecimated analysis of one line: out[i] = sum_j f[j] line[(i+j) mod n].
void analyze_line_stationary(const double* line, int n, const std::vector<double>& lo,
                             const std::vector<double>& hi, double* out_lo, double* out_hi) {
    const int len = static_cast<int>(lo.size());
    for (int i = 0; i < n; ++i) {
        double a = 0.0, d = 0.0;
        for (int j = 0; j < len; ++j) {
            const double x = line[(i + j) % n];
            a += lo[j] * x;
            d += hi[j] * x;
        }
        out_lo[i] = a;
        out_hi[i] = d;
    }
}

// Synthesis of one line of length n from n/2 low and high coefficients:
// x[i] = sum_j s[j] u[(i - len + 1 + j) mod n] with u the zero-upsampled
// coefficients. Both channels are accumulated in one pass.
void synthesize_line(const double* c_lo, const double* c_hi, int n,
                     const std::vector<double>& lo, const std::vector<double>& hi,
                     double* out) {
    const int len = static_cast<int>(lo.size());
    for (int i = 0; i < n; ++i) {
        double x = 0.0;
        for (int j = 0; j < len; ++j) {
            const int u = ((i - len + 1 + j) % n + n) % n;
            if (u % 2 == 0) {
                x += lo[j] * c_lo[u / 2] + hi[j] * c_hi[u / 2];
            }
        }
        out[i] = x;
    }
}

void require_even(const Image& img, const char* op) {
    if (img.width() % 2 != 0 || img.height() % 2 != 0) {
        throw std::invalid_argument(std::string(op) + ": dimensions must be even, got " +
                                    std::to_string(img.width()) + "x" +
                                    std::to_string(img.height()));
    }
}

std::vector<double> column(const Image& img, int x) {
    std::vector<double> col(static_cast<std::size_t>(img.height()));
    for (int y = 0; y < img.height(); ++y) col[static_cast<std::size_t>(y)] = img(x, y);
    return col;
}

}  // namespace

WaveletSpec make_wavelet(const std::string& name) {
    if (name == "haar" || name == "db1") {
        const double c = std::sqrt(0.5);
        return from_lowpass("haar", {c, c});
    }
    if (name == "db2") {
        const double s3 = std::sqrt(3.0);
        const double d = 4.0 * std::sqrt(2.0);
        return from_lowpass("db2", {(1.0 + s3) / d, (3.0 + s3) / d, (3.0 - s3) / d, (1.0 - s3) / d});
    }
    if (name == "db4") {
        return from_lowpass("db4", {0.23037781330889651, 0.71484657055291567,
                                    0.63088076792985892, -0.027983769416859854,
                                    -0.18703481171909309, 0.030841381835560764,
                                    0.032883011666885197, -0.010597401785069032});
    }
    throw std::invalid_argument("make_wavelet: unknown wavelet '" + name +
                                "' (supported: haar, db2, db4)");
}

SubbandSet dwt2(const Image& img, const WaveletSpec& spec) {
    require_even(img, "dwt2");
    const int w = img.width();
    const int h = img.height();
    const int hw = w / 2;
    const int hh2 = h / 2;

    // Row pass: each row of length w becomes w/2 low + w/2 high samples.
    Image row_lo(hw, h), row_hi(hw, h);
    std::vector<double> line(static_cast<std::size_t>(w));
    std::vector<double> out_lo(static_cast<std::size_t>(hw)), out_hi(static_cast<std::size_t>(hw));
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) line[static_cast<std::size_t>(x)] = img(x, y);
        analyze_line(line.data(), w, spec.analysis_lo, spec.analysis_hi, out_lo.data(),
                     out_hi.data());
        for (int x = 0; x < hw; ++x) {
            row_lo(x, y) = out_lo[static_cast<std::size_t>(x)];
            row_hi(x, y) = out_hi[static_cast<std::size_t>(x)];
        }
    }

    // Column pass on both half-width images.
    SubbandSet bands{Image(hw, hh2), Image(hw, hh2), Image(hw, hh2), Image(hw, hh2),
                     SubbandMode::decimated, w, h};
    std::vector<double> col_lo(static_cast<std::size_t>(hh2)), col_hi(static_cast<std::size_t>(hh2));
    for (int x = 0; x < hw; ++x) {
        auto col = column(row_lo, x);
        analyze_line(col.data(), h, spec.analysis_lo, spec.analysis_hi, col_lo.data(),
                     col_hi.data());
        for (int y = 0; y < hh2; ++y) {
            bands.ll(x, y) = col_lo[static_cast<std::size_t>(y)];
            bands.lh(x, y) = col_hi[static_cast<std::size_t>(y)];
        }
        col = column(row_hi, x);
        analyze_line(col.data(), h, spec.analysis_lo, spec.analysis_hi, col_lo.data(),
                     col_hi.data());
        for (int y = 0; y < hh2; ++y) {
            bands.hl(x, y) = col_lo[static_cast<std::size_t>(y)];
            bands.hh(x, y) = col_hi[static_cast<std::size_t>(y)];
        }
    }
    return bands;
}

Image idwt2(const SubbandSet& bands, const WaveletSpec& spec) {
    if (bands.mode != SubbandMode::decimated) {
        throw std::invalid_argument("idwt2: stationary sub-bands cannot be inverted here");
    }
    const int bw = bands.ll.width();
    const int bh = bands.ll.height();
    for (const Image* band : {&bands.lh, &bands.hl, &bands.hh}) {
        if (band->width() != bw || band->height() != bh) {
            throw std::invalid_argument("idwt2: sub-band sizes do not match");
        }
    }
    const int w = 2 * bw;
    const int h = 2 * bh;

    // Column synthesis: (ll, lh) -> row-lowpass image, (hl, hh) -> row-highpass.
    Image row_lo(bw, h), row_hi(bw, h);
    std::vector<double> c_lo(static_cast<std::size_t>(bh)), c_hi(static_cast<std::size_t>(bh));
    std::vector<double> out(static_cast<std::size_t>(h));
    for (int x = 0; x < bw; ++x) {
        for (int y = 0; y < bh; ++y) {
            c_lo[static_cast<std::size_t>(y)] = bands.ll(x, y);
            c_hi[static_cast<std::size_t>(y)] = bands.lh(x, y);
        }
        synthesize_line(c_lo.data(), c_hi.data(), h, spec.synthesis_lo, spec.synthesis_hi,
                        out.data());
        for (int y = 0; y < h; ++y) row_lo(x, y) = out[static_cast<std::size_t>(y)];

        for (int y = 0; y < bh; ++y) {
            c_lo[static_cast<std::size_t>(y)] = bands.hl(x, y);
            c_hi[static_cast<std::size_t>(y)] = bands.hh(x, y);
        }
        synthesize_line(c_lo.data(), c_hi.data(), h, spec.synthesis_lo, spec.synthesis_hi,
                        out.data());
        for (int y = 0; y < h; ++y) row_hi(x, y) = out[static_cast<std::size_t>(y)];
    }

    // Row synthesis combines the two channels into full-width rows.
    Image img(w, h);
    std::vector<double> r_lo(static_cast<std::size_t>(bw)), r_hi(static_cast<std::size_t>(bw));
    std::vector<double> line(static_cast<std::size_t>(w));
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < bw; ++x) {
            r_lo[static_cast<std::size_t>(x)] = row_lo(x, y);
            r_hi[static_cast<std::size_t>(x)] = row_hi(x, y);
        }
        synthesize_line(r_lo.data(), r_hi.data(), w, spec.synthesis_lo, spec.synthesis_hi,
                        line.data());
        for (int x = 0; x < w; ++x) img(x, y) = line[static_cast<std::size_t>(x)];
    }
    return img;
}

SubbandSet swt2(const Image& img, const WaveletSpec& spec) {
    require_even(img, "swt2");
    const int w = img.width();
    const int h = img.height();

    Image row_lo(w, h), row_hi(w, h);
    std::vector<double> line(static_cast<std::size_t>(w));
    std::vector<double> out_lo(static_cast<std::size_t>(w)), out_hi(static_cast<std::size_t>(w));
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) line[static_cast<std::size_t>(x)] = img(x, y);
        analyze_line_stationary(line.data(), w, spec.analysis_lo, spec.analysis_hi,
                                out_lo.data(), out_hi.data());
        for (int x = 0; x < w; ++x) {
            row_lo(x, y) = out_lo[static_cast<std::size_t>(x)];
            row_hi(x, y) = out_hi[static_cast<std::size_t>(x)];
        }
    }

    SubbandSet bands{Image(w, h), Image(w, h), Image(w, h), Image(w, h),
                     SubbandMode::stationary, w, h};
    std::vector<double> col_lo(static_cast<std::size_t>(h)), col_hi(static_cast<std::size_t>(h));
    for (int x = 0; x < w; ++x) {
        auto col = column(row_lo, x);
        analyze_line_stationary(col.data(), h, spec.analysis_lo, spec.analysis_hi,
                                col_lo.data(), col_hi.data());
        for (int y = 0; y < h; ++y) {
            bands.ll(x, y) = col_lo[static_cast<std::size_t>(y)];
            bands.lh(x, y) = col_hi[static_cast<std::size_t>(y)];
        }
        col = column(row_hi, x);
        analyze_line_stationary(col.data(), h, spec.analysis_lo, spec.analysis_hi,
                                col_lo.data(), col_hi.data());
        for (int y = 0; y < h; ++y) {
            bands.hl(x, y) = col_lo[static_cast<std::size_t>(y)];
            bands.hh(x, y) = col_hi[static_cast<std::size_t>(y)];
        }
    }
    return bands;
}

}  // namespace wisp
