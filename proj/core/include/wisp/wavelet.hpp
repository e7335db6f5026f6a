#pragma once

#include <string>
#include <vector>

#include "wisp/image.hpp"

namespace wisp {

/// Analysis/synthesis filter pair of a two-channel orthonormal filter bank.
///
/// Conventions (pinned so coefficient layouts are reproducible):
///  - analysis correlates the signal with the filter at even anchors:
///        y[k] = sum_j analysis[j] * x[(2k + j) mod N]
///  - synthesis correlates the zero-upsampled coefficients with the
///    synthesis filter anchored at n - (len - 1):
///        x[n] = sum_j synthesis[j] * u[(n - len + 1 + j) mod N]
///  - boundaries are periodic in both directions.
/// For the orthonormal families built by make_wavelet the synthesis filters
/// are the time-reversed analysis filters, and this pairing reconstructs
/// exactly.
struct WaveletSpec {
    std::string name;
    std::vector<double> analysis_lo;
    std::vector<double> analysis_hi;
    std::vector<double> synthesis_lo;
    std::vector<double> synthesis_hi;
    double dc_gain_1d = 0.0;  // sum of analysis_lo
};

enum class SubbandMode { decimated, stationary };

/// One level of sub-bands. Band letters give the (row pass, column pass)
/// filters: LH is row low-pass + column high-pass, HL the opposite, so an
/// image of purely horizontal stripes puts its energy in LH.
struct SubbandSet {
    Image ll;
    Image lh;
    Image hl;
    Image hh;
    SubbandMode mode = SubbandMode::decimated;
    int source_width = 0;
    int source_height = 0;
};

/// Builds a named filter bank. Supported: "haar" (alias "db1"), "db2", "db4".
WaveletSpec make_wavelet(const std::string& name);

/// Level-1 decimated 2-D transform: rows are filtered and downsampled by 2,
/// then columns. Requires even dimensions; each band is half-size.
SubbandSet dwt2(const Image& img, const WaveletSpec& spec);

/// Inverse of dwt2. Bands must be equal-sized and decimated; the result is
/// twice the band size in each dimension.
Image idwt2(const SubbandSet& bands, const WaveletSpec& spec);

/// Level-1 stationary (undecimated) transform: same filters, no
/// downsampling, so every band keeps the source size. Sampling a stationary
/// band at even phase (0,0) reproduces the decimated band.
SubbandSet swt2(const Image& img, const WaveletSpec& spec);

}  // namespace wisp
