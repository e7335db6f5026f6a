#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "test_images.hpp"
#include "wisp/histogram.hpp"
#include "wisp/svd.hpp"
#include "wisp/wavelet.hpp"

using namespace wisp;
using namespace wisp::testing;

namespace {

// Matrices ride in Images: height() rows, width() cols, entry (r,c) = m(c,r).
Image matrix(int rows, int cols, std::vector<double> row_major) {
    return Image(cols, rows, std::move(row_major));
}

double ortho_residual(const Image& m) {
    const int k = m.width();
    double worst = 0.0;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            double dot = 0.0;
            for (int r = 0; r < m.height(); ++r) dot += m(i, r) * m(j, r);
            worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

double max_abs_diff(const Image& a, const Image& b) {
    REQUIRE(a.width() == b.width());
    REQUIRE(a.height() == b.height());
    double m = 0.0;
    for (std::size_t i = 0; i < a.pixels().size(); ++i)
        m = std::max(m, std::abs(a.pixels()[i] - b.pixels()[i]));
    return m;
}

void check_factors(const Image& m, double tol = 1e-10) {
    SvdFactors f = svd(m);
    CHECK(f.rows == m.height());
    CHECK(f.cols == m.width());
    const std::size_t k = f.sigma.size();
    REQUIRE(k == static_cast<std::size_t>(std::min(m.width(), m.height())));
    for (std::size_t i = 0; i + 1 < k; ++i) CHECK(f.sigma[i] >= f.sigma[i + 1]);
    for (double s : f.sigma) CHECK(s >= 0.0);
    CHECK(ortho_residual(f.u) < tol);
    CHECK(ortho_residual(f.v) < tol);
    CHECK(max_abs_diff(reconstruct(f), m) < tol * std::max(1.0, f.sigma.empty() ? 0.0 : f.sigma[0]));
}

}  // namespace

TEST_CASE("diagonal matrices factor exactly") {
    Image m = matrix(3, 3, {3, 0, 0, 0, 7, 0, 0, 0, 1});
    SvdFactors f = svd(m);
    CHECK(f.sigma[0] == doctest::Approx(7.0).epsilon(1e-12));
    CHECK(f.sigma[1] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(f.sigma[2] == doctest::Approx(1.0).epsilon(1e-12));
    check_factors(m);
}

TEST_CASE("a 2x2 fixture has known singular values") {
    // A = [[3,0],[4,5]]: A^T A has eigenvalues 45 and 5.
    Image m = matrix(2, 2, {3, 0, 4, 5});
    SvdFactors f = svd(m);
    CHECK(f.sigma[0] == doctest::Approx(std::sqrt(45.0)).epsilon(1e-12));
    CHECK(f.sigma[1] == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
    check_factors(m);
}

TEST_CASE("identity factors to unit singular values") {
    Image m = matrix(4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
    SvdFactors f = svd(m);
    for (double s : f.sigma) CHECK(s == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("the zero matrix yields zero singular values and orthonormal bases") {
    Image m(3, 3, 0.0);
    SvdFactors f = svd(m);
    for (double s : f.sigma) CHECK(s == 0.0);
    CHECK(ortho_residual(f.u) < 1e-12);
    CHECK(ortho_residual(f.v) < 1e-12);
}

TEST_CASE("rank-one matrices have one nonzero singular value") {
    // outer product of (1,2,2) and (2,1,2): norm 3 * norm 3 = 9
    Image m = matrix(3, 3, {2, 1, 2, 4, 2, 4, 4, 2, 4});
    SvdFactors f = svd(m);
    CHECK(f.sigma[0] == doctest::Approx(9.0).epsilon(1e-12));
    CHECK(std::abs(f.sigma[1]) <= 1e-10);
    CHECK(std::abs(f.sigma[2]) <= 1e-10);
    check_factors(m);
}

TEST_CASE("wide and tall matrices produce economy factors") {
    Image wide = matrix(2, 5, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
    SvdFactors fw = svd(wide);
    CHECK(fw.u.height() == 2);
    CHECK(fw.u.width() == 2);
    CHECK(fw.v.height() == 5);
    CHECK(fw.v.width() == 2);
    check_factors(wide);

    Image tall = matrix(5, 2, {1, 6, 2, 7, 3, 8, 4, 9, 5, 10});
    SvdFactors ft = svd(tall);
    CHECK(ft.u.height() == 5);
    CHECK(ft.u.width() == 2);
    CHECK(ft.v.height() == 2);
    CHECK(ft.v.width() == 2);
    check_factors(tall);
    // transposing swaps the roles of U and V but keeps the spectrum
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(fw.sigma[i] == doctest::Approx(ft.sigma[i]).epsilon(1e-12));
}

TEST_CASE("singular values match the power-iteration reference") {
    for (auto [rows, cols, seed] : {std::tuple{8, 8, 1}, {12, 5, 2}, {5, 12, 3}, {16, 16, 4}}) {
        Image m = random_image(cols, rows, static_cast<std::uint64_t>(seed));
        CAPTURE(rows);
        CAPTURE(cols);
        SvdFactors f = svd(m);
        std::vector<double> want = singular_values_oracle(m);
        REQUIRE(f.sigma.size() == want.size());
        const double scale = std::max(want[0], 1.0);
        for (std::size_t i = 0; i < want.size(); ++i)
            CHECK(std::abs(f.sigma[i] - want[i]) <= 1e-8 * scale);
        check_factors(m, 1e-8);
    }
}

TEST_CASE("degenerate two-level images factor without stalling") {
    // Equalizing a {100,200} half-split yields a {0,255} image whose
    // low-pass band has exactly-zero and pairwise-identical columns.
    Image half(16, 16);
    for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x) half(x, y) = x < 8 ? 100.0 : 200.0;
    WaveletSpec w = make_wavelet("haar");
    Image ll = dwt2(half, w).ll;
    Image lle = dwt2(equalize_ghe(half), w).ll;
    SvdFactors f1 = svd(ll);
    SvdFactors f2 = svd(lle);
    CHECK(f1.sigma[0] == doctest::Approx(spectral_norm_oracle(ll)).epsilon(1e-10));
    CHECK(f2.sigma[0] == doctest::Approx(spectral_norm_oracle(lle)).epsilon(1e-10));
    CHECK(max_abs_diff(reconstruct(f1), ll) < 1e-9);
    CHECK(max_abs_diff(reconstruct(f2), lle) < 1e-9);
}

TEST_CASE("scaling singular values scales the matrix") {
    Image m(9, 7);
    for (int y = 0; y < 7; ++y)
        for (int x = 0; x < 9; ++x) m(x, y) = std::sin(0.7 * x + 1.3 * y) * 100.0;
    SvdFactors f = svd(m);
    double xi = 1.7;
    Image scaled = scale_singular_values(f, xi);
    double worst = 0.0;
    for (std::size_t i = 0; i < m.pixels().size(); ++i)
        worst = std::max(worst, std::abs(scaled.pixels()[i] - xi * m.pixels()[i]));
    CHECK(worst < 1e-8 * f.sigma[0]);
}

TEST_CASE("scale_singular_values rejects non-positive factors") {
    SvdFactors f = svd(Image(3, 3, 1.0));
    CHECK_THROWS_AS(scale_singular_values(f, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(scale_singular_values(f, -2.0), std::invalid_argument);
}

TEST_CASE("non-finite entries are rejected") {
    Image m(2, 2, 1.0);
    m(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(svd(m), std::invalid_argument);
    m(0, 0) = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(svd(m), std::invalid_argument);
}

TEST_CASE("max_singular_value matches the full factorization") {
    Image m = random_image(12, 9, 8);
    CHECK(max_singular_value(m) == doctest::Approx(svd(m).sigma[0]).epsilon(1e-13));
    CHECK(max_singular_value(m) == doctest::Approx(spectral_norm_oracle(m)).epsilon(1e-10));
}

TEST_CASE("factorization is deterministic") {
    Image m = random_image(10, 10, 99);
    SvdFactors a = svd(m);
    SvdFactors b = svd(m);
    CHECK(a.sigma == b.sigma);
    CHECK(a.u.pixels() == b.u.pixels());
    CHECK(a.v.pixels() == b.v.pixels());
}

TEST_CASE("sign convention pins each left vector") {
    Image m = random_image(6, 6, 123);
    SvdFactors f = svd(m);
    for (int j = 0; j < f.u.width(); ++j) {
        double best = 0.0;
        for (int r = 0; r < f.u.height(); ++r)
            if (std::abs(f.u(j, r)) > std::abs(best)) best = f.u(j, r);
        CHECK(best >= 0.0);
    }
}
