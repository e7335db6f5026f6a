#pragma once

#include <optional>
#include <string>

#include "wisp/filters.hpp"
#include "wisp/image.hpp"
#include "wisp/metrics.hpp"
#include "wisp/wavelet.hpp"

namespace wisp {

struct EnhanceConfig {
    std::string wavelet = "haar";
    int median_kernel = 3;
    bool denoise = true;
    int resolution_factor = 2;  // the level-1 method only supports 2
    bool clamp_output = true;
};

/// Optional per-stage snapshots, filled when a trace pointer is passed in.
/// Copies can be large; intended for debugging and the CLI --trace-dir flag.
struct StageTrace {
    std::optional<Image> denoised;
    std::optional<SubbandSet> subbands;            // decimated bands of the input
    std::optional<SubbandSet> corrected_subbands;  // interpolated + stationary sums
    std::optional<Image> resolution_enhanced;
    std::optional<Image> equalized;
    std::optional<double> xi;
    std::optional<Image> contrast_preclamp;
    std::optional<Image> final;
};

/// Doubles the resolution by sub-band correction.
///
/// The input is decomposed with both the decimated and the stationary
/// level-1 transforms. Each decimated high-frequency band is bicubically
/// interpolated to input size and corrected by adding the matching
/// stationary band. The input itself, scaled by the 2-D DC gain of the
/// analysis low-pass, serves as the low-frequency band; the inverse
/// transform of the corrected set yields the double-size result. Odd
/// dimensions are padded internally and the output cropped back to exactly
/// twice the input size. The output is not clamped.
Image resolution_enhance(const Image& img, const EnhanceConfig& cfg,
                         StageTrace* trace = nullptr);

/// Boosts contrast by scaling the singular values of the low-frequency band.
///
/// The image and its histogram-equalized counterpart are both decomposed;
/// xi, the ratio of the largest singular values of the two low-frequency
/// bands, rescales the original band's singular spectrum. The inverse
/// transform keeps the original high-frequency bands untouched, and the
/// result is clamped to [0,255]. Throws "degenerate contrast input" for an
/// all-zero image (the ratio is undefined).
Image contrast_enhance(const Image& img, const EnhanceConfig& cfg,
                       StageTrace* trace = nullptr);

/// Full pipeline: median denoising (optional), resolution enhancement,
/// contrast enhancement, final clamp. Output is exactly twice the input
/// size. Images that are constant after resolution enhancement skip the
/// contrast stage instead of erroring.
Image enhance_full(const Image& img_noisy, const EnhanceConfig& cfg,
                   StageTrace* trace = nullptr);

struct EvaluationPair {
    MetricsReport proposed;
    MetricsReport baseline;
};

/// Reproducible degrade-then-restore harness. The ground truth is halved
/// bicubically, corrupted with salt-pepper noise, then restored once with
/// the full pipeline and once with a median + bicubic + equalization
/// baseline; both restorations are scored against the ground truth.
EvaluationPair evaluate(const Image& ground_truth, const EnhanceConfig& cfg,
                        const NoiseSpec& noise);

}  // namespace wisp
