#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "test_images.hpp"
#include "wisp/metrics.hpp"

using namespace wisp;
using namespace wisp::testing;

TEST_CASE("mse of identical images is zero") {
    Image img = random_image(9, 9, 2);
    CHECK(mse(img, img) == 0.0);
}

TEST_CASE("mse of a unit offset is one") {
    Image a(6, 4, 10.0);
    Image b(6, 4, 11.0);
    CHECK(mse(a, b) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(mse(b, a) == mse(a, b));
}

TEST_CASE("mse of a small fixture") {
    Image a(2, 1, std::vector<double>{0, 0});
    Image b(2, 1, std::vector<double>{3, 4});
    CHECK(mse(a, b) == doctest::Approx(12.5).epsilon(1e-12));
    CHECK(rmse(a, b) == doctest::Approx(std::sqrt(12.5)).epsilon(1e-12));
}

TEST_CASE("rmse squared equals mse") {
    Image a = random_image(8, 8, 3);
    Image b = random_image(8, 8, 4);
    double r = rmse(a, b);
    CHECK(r * r == doctest::Approx(mse(a, b)).epsilon(1e-12));
    Image c(2, 2, std::vector<double>{2, 0, 0, 2});
    CHECK(rmse(c, Image(2, 2, 0.0)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("psnr of identical images is the infinity sentinel") {
    Image img = random_image(5, 5, 6);
    CHECK(psnr(img, img) == std::numeric_limits<double>::infinity());
}

TEST_CASE("psnr is zero decibels when the error equals the peak") {
    Image a(4, 4, 0.0);
    Image b(4, 4, 255.0);
    CHECK(psnr(a, b) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("psnr of a uniform unit offset") {
    Image a(10, 10, 100.0);
    Image b(10, 10, 101.0);
    CHECK(psnr(a, b) == doctest::Approx(10.0 * std::log10(65025.0)).epsilon(1e-12));
    CHECK(psnr(a, b) == doctest::Approx(48.130803608679).epsilon(1e-9));
}

TEST_CASE("psnr falls as mse rises") {
    Image ref(8, 8, 128.0);
    Image near(8, 8, 129.0);
    Image far(8, 8, 140.0);
    CHECK(psnr(ref, near) > psnr(ref, far));
}

TEST_CASE("custom peaks rescale psnr") {
    Image a(4, 4, 0.0);
    Image b(4, 4, 1.0);
    CHECK(psnr(a, b, 1.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(psnr(a, b, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(psnr(a, b, -1.0), std::invalid_argument);
}

TEST_CASE("metrics reject size mismatches") {
    Image a(4, 4);
    Image b(4, 5);
    CHECK_THROWS_AS(mse(a, b), std::invalid_argument);
    CHECK_THROWS_AS(psnr(a, b), std::invalid_argument);
    CHECK_THROWS_AS(rmse(a, b), std::invalid_argument);
    CHECK_THROWS_AS(compare(a, b), std::invalid_argument);
}

TEST_CASE("difference entropy of a constant image is zero") {
    CHECK(entropy_diff(Image(7, 3, 42.0)) == 0.0);
}

TEST_CASE("alternating stripes give exactly one bit") {
    // Odd width: each row has an even number of differences, half +255 and half -255.
    Image img(9, 4);
    for (int y = 0; y < 4; ++y)
        for (int x = 0; x < 9; ++x) img(x, y) = (x % 2) ? 255.0 : 0.0;
    CHECK(entropy_diff(img) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("a short row fixture with a two-to-one difference split") {
    Image img(4, 1, std::vector<double>{0, 1, 0, 1});
    // differences {+1,-1,+1}: entropy = 2/3 log2(3/2) + 1/3 log2(3)
    double want = (2.0 / 3.0) * std::log2(1.5) + (1.0 / 3.0) * std::log2(3.0);
    CHECK(entropy_diff(img) == doctest::Approx(want).epsilon(1e-12));
    CHECK(entropy_diff(img) == doctest::Approx(0.9182958340544896).epsilon(1e-12));
}

TEST_CASE("difference entropy quantizes before differencing") {
    Image a(3, 1, std::vector<double>{10.2, 10.4, 9.8});
    CHECK(entropy_diff(a) == 0.0);  // all levels round to 10
}

TEST_CASE("difference entropy ignores an in-range constant shift") {
    Image img = random_image(16, 16, 9);
    for (double& v : img.pixels()) v = std::floor(v * 0.8);  // keep headroom
    Image shifted = img;
    for (double& v : shifted.pixels()) v += 10.0;
    CHECK(entropy_diff(shifted) == doctest::Approx(entropy_diff(img)).epsilon(1e-12));
}

TEST_CASE("difference entropy requires two columns") {
    CHECK_THROWS_AS(entropy_diff(Image(1, 5)), std::invalid_argument);
}

TEST_CASE("compare bundles all metrics consistently") {
    Image ref = random_image(16, 16, 1);
    Image test = random_image(16, 16, 2);
    MetricsReport r = compare(ref, test);
    CHECK(r.mse == doctest::Approx(mse(ref, test)).epsilon(1e-15));
    CHECK(r.rmse == doctest::Approx(std::sqrt(r.mse)).epsilon(1e-12));
    CHECK(r.psnr_db == doctest::Approx(psnr(ref, test)).epsilon(1e-12));
    CHECK(r.entropy_ref == doctest::Approx(entropy_diff(ref)).epsilon(1e-15));
    CHECK(r.entropy_test == doctest::Approx(entropy_diff(test)).epsilon(1e-15));
    MetricsReport same = compare(ref, ref);
    CHECK(same.mse == 0.0);
    CHECK(same.psnr_db == std::numeric_limits<double>::infinity());
}
