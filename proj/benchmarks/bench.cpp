#include <cmath>

#include <benchmark/benchmark.h>

#include "wisp/filters.hpp"
#include "wisp/histogram.hpp"
#include "wisp/image.hpp"
#include "wisp/pipeline.hpp"
#include "wisp/resample.hpp"
#include "wisp/svd.hpp"
#include "wisp/wavelet.hpp"

namespace {

wisp::Image textured(int width, int height) {
    wisp::Image img(width, height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            img(x, y) = 127.5 + 60.0 * std::sin(0.31 * x) * std::sin(0.17 * y) +
                        40.0 * std::sin(0.05 * (x + 2 * y));
        }
    }
    return img;
}

void bm_dwt2(benchmark::State& state, const char* wavelet) {
    wisp::Image img = textured(512, 512);
    wisp::WaveletSpec spec = wisp::make_wavelet(wavelet);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wisp::dwt2(img, spec));
    }
}

void bm_idwt2(benchmark::State& state) {
    wisp::Image img = textured(512, 512);
    wisp::WaveletSpec spec = wisp::make_wavelet("haar");
    wisp::SubbandSet bands = wisp::dwt2(img, spec);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wisp::idwt2(bands, spec));
    }
}

void bm_swt2(benchmark::State& state, const char* wavelet) {
    wisp::Image img = textured(512, 512);
    wisp::WaveletSpec spec = wisp::make_wavelet(wavelet);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wisp::swt2(img, spec));
    }
}

void bm_median(benchmark::State& state) {
    wisp::NoiseSpec noise;
    wisp::Image img = wisp::add_salt_pepper(textured(512, 512), noise);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wisp::median_filter(img, static_cast<int>(state.range(0))));
    }
}

void bm_bicubic_up2(benchmark::State& state) {
    wisp::Image img = textured(256, 256);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wisp::bicubic_resize(img, 2.0));
    }
}

void bm_equalize(benchmark::State& state) {
    wisp::Image img = textured(512, 512);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wisp::equalize_ghe(img));
    }
}

void bm_svd(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    wisp::Image m = textured(n, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wisp::svd(m));
    }
}

void bm_enhance_full(benchmark::State& state) {
    wisp::NoiseSpec noise;
    wisp::Image img = wisp::add_salt_pepper(textured(256, 256), noise);
    wisp::EnhanceConfig cfg;
    for (auto _ : state) {
        benchmark::DoNotOptimize(wisp::enhance_full(img, cfg));
    }
}

}  // namespace

BENCHMARK_CAPTURE(bm_dwt2, haar_512, "haar");
BENCHMARK_CAPTURE(bm_dwt2, db4_512, "db4");
BENCHMARK(bm_idwt2);
BENCHMARK_CAPTURE(bm_swt2, haar_512, "haar");
BENCHMARK_CAPTURE(bm_swt2, db4_512, "db4");
BENCHMARK(bm_median)->Arg(3)->Arg(5);
BENCHMARK(bm_bicubic_up2);
BENCHMARK(bm_equalize);
BENCHMARK(bm_svd)->Arg(64)->Arg(128);
BENCHMARK(bm_enhance_full)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
