#include "wisp/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "wisp/histogram.hpp"
#include "wisp/resample.hpp"
#include "wisp/svd.hpp"

namespace wisp {

namespace {

void validate_config(const EnhanceConfig& cfg) {
    if (cfg.resolution_factor != 2) {
        throw std::invalid_argument("pipeline: resolution factor is fixed at 2");
    }
    if (cfg.median_kernel < 3 || cfg.median_kernel % 2 == 0) {
        throw std::invalid_argument("pipeline: median kernel must be odd and >= 3");
    }
}

Image clamped(Image img) {
    for (double& v : img.pixels()) v = std::clamp(v, 0.0, 255.0);
    return img;
}

Image sum_of(const Image& a, const Image& b) {
    Image out = a;
    auto& dst = out.pixels();
    const auto& src = b.pixels();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
    return out;
}

Image scaled(const Image& img, double factor) {
    Image out = img;
    for (double& v : out.pixels()) v *= factor;
    return out;
}

bool approximately_constant(const Image& img) {
    const auto [lo, hi] = std::minmax_element(img.pixels().begin(), img.pixels().end());
    return (*hi - *lo) <= 1e-9 * std::max(1.0, std::abs(*hi));
}

}  // namespace

Image resolution_enhance(const Image& img, const EnhanceConfig& cfg, StageTrace* trace) {
    validate_config(cfg);
    const WaveletSpec spec = make_wavelet(cfg.wavelet);

    const PadResult padded = pad_to_even(img);
    const Image& a = padded.image;

    SubbandSet dec = dwt2(a, spec);
    SubbandSet sta = swt2(a, spec);

    const double gain2d = spec.dc_gain_1d * spec.dc_gain_1d;
    SubbandSet corrected{scaled(a, gain2d),
                         sum_of(bicubic_resize(dec.lh, 2.0), sta.lh),
                         sum_of(bicubic_resize(dec.hl, 2.0), sta.hl),
                         sum_of(bicubic_resize(dec.hh, 2.0), sta.hh),
                         SubbandMode::decimated,
                         2 * a.width(),
                         2 * a.height()};

    Image out = idwt2(corrected, spec);
    if (padded.original_width != a.width() || padded.original_height != a.height()) {
        out = crop(out, {0, 0, 2 * padded.original_width, 2 * padded.original_height});
    }

    if (trace) {
        trace->subbands = std::move(dec);
        trace->corrected_subbands = std::move(corrected);
        trace->resolution_enhanced = out;
    }
    return out;
}

Image contrast_enhance(const Image& img, const EnhanceConfig& cfg, StageTrace* trace) {
    validate_config(cfg);
    const WaveletSpec spec = make_wavelet(cfg.wavelet);

    const PadResult padded = pad_to_even(img);
    const Image& a = padded.image;

    const Image equalized = equalize_ghe(a);
    const SubbandSet bands = dwt2(a, spec);
    const SubbandSet bands_eq = dwt2(equalized, spec);

    const SvdFactors factors = svd(bands.ll);
    const double sv_input = factors.sigma.empty() ? 0.0 : factors.sigma.front();
    if (sv_input == 0.0) {
        throw std::runtime_error("degenerate contrast input");
    }
    const double xi = max_singular_value(bands_eq.ll) / sv_input;

    SubbandSet corrected{scale_singular_values(factors, xi), bands.lh, bands.hl,
                         bands.hh, bands.mode, bands.source_width, bands.source_height};
    Image out = idwt2(corrected, spec);
    if (padded.original_width != a.width() || padded.original_height != a.height()) {
        out = crop(out, {0, 0, padded.original_width, padded.original_height});
    }

    if (trace) {
        trace->equalized = equalized;
        trace->xi = xi;
        trace->contrast_preclamp = out;
    }
    return clamped(std::move(out));
}

Image enhance_full(const Image& img_noisy, const EnhanceConfig& cfg, StageTrace* trace) {
    validate_config(cfg);

    Image work = img_noisy;
    if (cfg.denoise) {
        work = median_filter(work, cfg.median_kernel);
        if (trace) trace->denoised = work;
    }

    Image resolved = resolution_enhance(work, cfg, trace);

    Image out = approximately_constant(resolved) ? std::move(resolved)
                                                 : contrast_enhance(resolved, cfg, trace);
    if (cfg.clamp_output) out = clamped(std::move(out));

    if (trace) trace->final = out;
    return out;
}

EvaluationPair evaluate(const Image& ground_truth, const EnhanceConfig& cfg,
                        const NoiseSpec& noise) {
    if (ground_truth.width() % 2 != 0 || ground_truth.height() % 2 != 0) {
        throw std::invalid_argument("evaluate: ground truth must have even dimensions");
    }
    const Image small = bicubic_downscale_half(ground_truth);
    const Image noisy = add_salt_pepper(small, noise);

    const Image proposed = enhance_full(noisy, cfg);
    const Image baseline = equalize_ghe(bicubic_resize(median_filter(noisy, 3), 2.0));

    return EvaluationPair{compare(ground_truth, proposed), compare(ground_truth, baseline)};
}

}  // namespace wisp
