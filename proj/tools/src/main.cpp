#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wisp/filters.hpp"
#include "wisp/histogram.hpp"
#include "wisp/image.hpp"
#include "wisp/image_io.hpp"
#include "wisp/metrics.hpp"
#include "wisp/pipeline.hpp"
#include "wisp/resample.hpp"
#include "wisp/wavelet.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct EnhanceFlags {
    std::string wavelet = "haar";
    int median_kernel = 3;
    bool no_denoise = false;

    wisp::EnhanceConfig config() const {
        wisp::EnhanceConfig cfg;
        cfg.wavelet = wavelet;
        cfg.median_kernel = median_kernel;
        cfg.denoise = !no_denoise;
        return cfg;
    }
};

void add_enhance_flags(CLI::App* sub, EnhanceFlags& flags) {
    sub->add_option("--wavelet", flags.wavelet, "Wavelet family: haar, db2, db4")
        ->capture_default_str();
    sub->add_option("--median-kernel", flags.median_kernel, "Median window size (odd, >= 3)")
        ->capture_default_str();
    sub->add_flag("--no-denoise", flags.no_denoise, "Skip the median prefilter");
}

// Affine view rescale for sub-band dumps: min..max -> 0..255, constant -> 0.
wisp::Image rescale_for_view(const wisp::Image& band, double& min_out, double& max_out) {
    const auto [lo, hi] = std::minmax_element(band.pixels().begin(), band.pixels().end());
    min_out = *lo;
    max_out = *hi;
    wisp::Image out(band.width(), band.height());
    const double span = *hi - *lo;
    for (std::size_t i = 0; i < band.pixels().size(); ++i) {
        out.pixels()[i] = span > 0.0 ? (band.pixels()[i] - *lo) / span * 255.0 : 0.0;
    }
    return out;
}

void dump_band(const wisp::Image& band, const fs::path& path, const std::string& label) {
    double lo = 0.0;
    double hi = 0.0;
    wisp::save_image(rescale_for_view(band, lo, hi), path.string());
    std::cout << label << " path=" << path.string() << " min=" << lo << " max=" << hi << '\n';
}

void write_trace(const wisp::StageTrace& trace, const fs::path& dir) {
    fs::create_directories(dir);
    if (trace.denoised) wisp::save_image(*trace.denoised, (dir / "denoised.pgm").string());
    if (trace.subbands) {
        double lo = 0.0, hi = 0.0;
        wisp::save_image(rescale_for_view(trace.subbands->ll, lo, hi), (dir / "band_ll.pgm").string());
        wisp::save_image(rescale_for_view(trace.subbands->lh, lo, hi), (dir / "band_lh.pgm").string());
        wisp::save_image(rescale_for_view(trace.subbands->hl, lo, hi), (dir / "band_hl.pgm").string());
        wisp::save_image(rescale_for_view(trace.subbands->hh, lo, hi), (dir / "band_hh.pgm").string());
    }
    if (trace.corrected_subbands) {
        double lo = 0.0, hi = 0.0;
        const auto& c = *trace.corrected_subbands;
        wisp::save_image(rescale_for_view(c.ll, lo, hi), (dir / "corrected_ll.pgm").string());
        wisp::save_image(rescale_for_view(c.lh, lo, hi), (dir / "corrected_lh.pgm").string());
        wisp::save_image(rescale_for_view(c.hl, lo, hi), (dir / "corrected_hl.pgm").string());
        wisp::save_image(rescale_for_view(c.hh, lo, hi), (dir / "corrected_hh.pgm").string());
    }
    if (trace.resolution_enhanced) {
        wisp::save_image(*trace.resolution_enhanced, (dir / "resolution.pgm").string());
    }
    if (trace.equalized) wisp::save_image(*trace.equalized, (dir / "equalized.pgm").string());
    if (trace.contrast_preclamp) {
        wisp::save_image(*trace.contrast_preclamp, (dir / "contrast_preclamp.pgm").string());
    }
    if (trace.final) wisp::save_image(*trace.final, (dir / "final.pgm").string());
    if (trace.xi) {
        std::ofstream out(dir / "xi.txt");
        out.precision(17);
        out << *trace.xi << '\n';
    }
}

ordered_json metrics_json(const wisp::MetricsReport& m) {
    ordered_json j;
    j["mse"] = m.mse;
    j["rmse"] = m.rmse;
    if (std::isinf(m.psnr_db)) {
        j["psnr_db"] = "inf";
    } else {
        j["psnr_db"] = m.psnr_db;
    }
    j["entropy_ref"] = m.entropy_ref;
    j["entropy_test"] = m.entropy_test;
    return j;
}

ordered_json psnr_or_inf(double v) {
    if (std::isinf(v)) return "inf";
    return v;
}

int run_evaluate_one(const fs::path& path, const wisp::EnhanceConfig& cfg,
                     const wisp::NoiseSpec& noise, int& wins, double& sum_proposed,
                     double& sum_baseline) {
    const wisp::Image gt = wisp::load_image(path.string());
    const wisp::EvaluationPair pair = wisp::evaluate(gt, cfg, noise);

    ordered_json line;
    line["image"] = path.filename().string();
    line["proposed"] = metrics_json(pair.proposed);
    line["baseline"] = metrics_json(pair.baseline);
    std::cout << line.dump() << '\n';

    if (pair.proposed.psnr_db > pair.baseline.psnr_db) ++wins;
    sum_proposed += pair.proposed.psnr_db;
    sum_baseline += pair.baseline.psnr_db;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wisp: wavelet-domain resolution and contrast enhancement for "
                 "grayscale satellite images"};
    app.require_subcommand(1);

    std::string in_path;
    std::string out_path;

    auto* cmd_enhance = app.add_subcommand("enhance", "Run the full pipeline: denoise, "
                                                      "2x resolution, contrast");
    EnhanceFlags enhance_flags;
    std::string trace_dir;
    cmd_enhance->add_option("input", in_path, "Input image (PGM or PNG)")->required();
    cmd_enhance->add_option("output", out_path, "Output image path")->required();
    add_enhance_flags(cmd_enhance, enhance_flags);
    cmd_enhance->add_option("--trace-dir", trace_dir,
                            "Directory for per-stage snapshot images");

    auto* cmd_resolve = app.add_subcommand("resolve", "Resolution enhancement only (2x)");
    std::string resolve_wavelet = "haar";
    cmd_resolve->add_option("input", in_path)->required();
    cmd_resolve->add_option("output", out_path)->required();
    cmd_resolve->add_option("--wavelet", resolve_wavelet, "Wavelet family")
        ->capture_default_str();

    auto* cmd_contrast = app.add_subcommand("contrast", "Contrast enhancement only");
    std::string contrast_wavelet = "haar";
    bool dump_histogram = false;
    cmd_contrast->add_option("input", in_path)->required();
    cmd_contrast->add_option("output", out_path)->required();
    cmd_contrast->add_option("--wavelet", contrast_wavelet, "Wavelet family")
        ->capture_default_str();
    cmd_contrast->add_flag("--dump-histogram", dump_histogram,
                           "Print the input's 256 histogram counts to stdout");

    auto* cmd_denoise = app.add_subcommand("denoise", "Median filter");
    int denoise_kernel = 3;
    cmd_denoise->add_option("input", in_path)->required();
    cmd_denoise->add_option("output", out_path)->required();
    cmd_denoise->add_option("--median-kernel", denoise_kernel, "Window size (odd, >= 3)")
        ->capture_default_str();

    auto* cmd_addnoise = app.add_subcommand("addnoise", "Add salt-pepper noise");
    double noise_density = 0.05;
    std::uint64_t noise_seed = 0;
    cmd_addnoise->add_option("input", in_path)->required();
    cmd_addnoise->add_option("output", out_path)->required();
    cmd_addnoise->add_option("--density", noise_density, "Corruption probability in [0,1]")
        ->capture_default_str();
    cmd_addnoise->add_option("--seed", noise_seed, "RNG seed")->capture_default_str();

    auto* cmd_resize = app.add_subcommand("resize", "Bicubic resampling");
    double resize_factor = 2.0;
    cmd_resize->add_option("input", in_path)->required();
    cmd_resize->add_option("output", out_path)->required();
    cmd_resize->add_option("--factor", resize_factor, "Scale factor (> 0)")
        ->capture_default_str();

    auto* cmd_dwt = app.add_subcommand("dwt", "Dump the four level-1 sub-bands as images");
    std::string dwt_prefix;
    std::string dwt_wavelet = "haar";
    cmd_dwt->add_option("input", in_path)->required();
    cmd_dwt->add_option("out-prefix", dwt_prefix,
                        "Band images are written to <prefix>_ll.pgm etc., rescaled to "
                        "0..255 (constant bands map to 0); the min/max of each band is "
                        "printed to stdout")
        ->required();
    cmd_dwt->add_option("--wavelet", dwt_wavelet, "Wavelet family")->capture_default_str();

    auto* cmd_metrics = app.add_subcommand("metrics", "Print quality metrics as JSON");
    std::string metrics_ref;
    std::string metrics_test;
    cmd_metrics->add_option("reference", metrics_ref)->required();
    cmd_metrics->add_option("test", metrics_test)->required();

    auto* cmd_evaluate = app.add_subcommand(
        "evaluate", "Degrade a ground-truth image (bicubic half + salt-pepper), restore "
                    "with the pipeline and with a median+bicubic+equalize baseline, and "
                    "print one JSON line of metrics per image");
    std::string eval_image;
    std::string eval_corpus;
    EnhanceFlags eval_flags;
    double eval_density = 0.05;
    std::uint64_t eval_seed = 0;
    cmd_evaluate->add_option("image", eval_image, "Ground-truth image");
    cmd_evaluate->add_option("--corpus", eval_corpus,
                             "Directory of ground-truth images (.pgm/.pnm/.png); adds a "
                             "summary line after the per-image lines");
    add_enhance_flags(cmd_evaluate, eval_flags);
    cmd_evaluate->add_option("--density", eval_density, "Noise density")
        ->capture_default_str();
    cmd_evaluate->add_option("--seed", eval_seed, "Noise seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(cmd_enhance)) {
            const wisp::Image input = wisp::load_image(in_path);
            wisp::StageTrace trace;
            wisp::StageTrace* trace_ptr = trace_dir.empty() ? nullptr : &trace;
            const wisp::Image output =
                wisp::enhance_full(input, enhance_flags.config(), trace_ptr);
            wisp::save_image(output, out_path);
            if (trace_ptr) write_trace(trace, trace_dir);
        } else if (app.got_subcommand(cmd_resolve)) {
            wisp::EnhanceConfig cfg;
            cfg.wavelet = resolve_wavelet;
            wisp::save_image(wisp::resolution_enhance(wisp::load_image(in_path), cfg),
                             out_path);
        } else if (app.got_subcommand(cmd_contrast)) {
            const wisp::Image input = wisp::load_image(in_path);
            if (dump_histogram) {
                const auto counts = wisp::histogram256(input);
                for (std::size_t i = 0; i < counts.size(); ++i) {
                    std::cout << (i ? "," : "") << counts[i];
                }
                std::cout << '\n';
            }
            wisp::EnhanceConfig cfg;
            cfg.wavelet = contrast_wavelet;
            wisp::save_image(wisp::contrast_enhance(input, cfg), out_path);
        } else if (app.got_subcommand(cmd_denoise)) {
            wisp::save_image(wisp::median_filter(wisp::load_image(in_path), denoise_kernel),
                             out_path);
        } else if (app.got_subcommand(cmd_addnoise)) {
            wisp::NoiseSpec noise;
            noise.density = noise_density;
            noise.seed = noise_seed;
            wisp::save_image(wisp::add_salt_pepper(wisp::load_image(in_path), noise),
                             out_path);
        } else if (app.got_subcommand(cmd_resize)) {
            wisp::save_image(wisp::bicubic_resize(wisp::load_image(in_path), resize_factor),
                             out_path);
        } else if (app.got_subcommand(cmd_dwt)) {
            const wisp::SubbandSet bands =
                wisp::dwt2(wisp::load_image(in_path), wisp::make_wavelet(dwt_wavelet));
            dump_band(bands.ll, dwt_prefix + "_ll.pgm", "ll");
            dump_band(bands.lh, dwt_prefix + "_lh.pgm", "lh");
            dump_band(bands.hl, dwt_prefix + "_hl.pgm", "hl");
            dump_band(bands.hh, dwt_prefix + "_hh.pgm", "hh");
        } else if (app.got_subcommand(cmd_metrics)) {
            const wisp::MetricsReport report =
                wisp::compare(wisp::load_image(metrics_ref), wisp::load_image(metrics_test));
            std::cout << metrics_json(report).dump() << '\n';
        } else if (app.got_subcommand(cmd_evaluate)) {
            if (eval_image.empty() == eval_corpus.empty()) {
                std::cerr << "wisp evaluate: give exactly one of <image> or --corpus\n";
                return 1;
            }
            wisp::NoiseSpec noise;
            noise.density = eval_density;
            noise.seed = eval_seed;
            const wisp::EnhanceConfig cfg = eval_flags.config();

            int wins = 0;
            double sum_proposed = 0.0;
            double sum_baseline = 0.0;
            if (!eval_image.empty()) {
                run_evaluate_one(eval_image, cfg, noise, wins, sum_proposed, sum_baseline);
            } else {
                std::vector<fs::path> paths;
                for (const auto& entry : fs::directory_iterator(eval_corpus)) {
                    if (!entry.is_regular_file()) continue;
                    const std::string ext = entry.path().extension().string();
                    if (ext == ".pgm" || ext == ".pnm" || ext == ".png") {
                        paths.push_back(entry.path());
                    }
                }
                if (paths.empty()) {
                    throw std::runtime_error(eval_corpus + ": no .pgm/.pnm/.png images");
                }
                std::sort(paths.begin(), paths.end(), [](const fs::path& a, const fs::path& b) {
                    return a.filename().string() < b.filename().string();
                });
                for (const auto& path : paths) {
                    run_evaluate_one(path, cfg, noise, wins, sum_proposed, sum_baseline);
                }
                const double n = static_cast<double>(paths.size());
                ordered_json summary;
                summary["summary"]["images"] = paths.size();
                summary["summary"]["proposed_wins"] = wins;
                summary["summary"]["mean_psnr_proposed"] = psnr_or_inf(sum_proposed / n);
                summary["summary"]["mean_psnr_baseline"] = psnr_or_inf(sum_baseline / n);
                std::cout << summary.dump() << '\n';
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "wisp: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
