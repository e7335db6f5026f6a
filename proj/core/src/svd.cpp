#include "wisp/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wisp {

namespace {

constexpr double kOrthoTol = 1e-12;  // relative column-pair orthogonality
constexpr double kSnapTol = 1e-13;   // columns below this fraction of ||A||_F are zeroed
constexpr int kMaxSweeps = 60;

// Column-major working copy: col(j) is a contiguous vector of length m.
struct Columns {
    int m = 0;
    int n = 0;
    std::vector<double> data;  // n columns of length m

    double* col(int j) { return data.data() + static_cast<std::size_t>(j) * static_cast<std::size_t>(m); }
    const double* col(int j) const {
        return data.data() + static_cast<std::size_t>(j) * static_cast<std::size_t>(m);
    }
};

double dot(const double* a, const double* b, int m) {
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += a[i] * b[i];
    return s;
}

// One-sided Jacobi on the columns of `a` (m >= n), accumulating the right
// rotations into `v` (n x n, starts as identity).
//
// Columns whose norm falls below kSnapTol of the (rotation-invariant)
// Frobenius norm are zeroed outright: such columns are rounding residue of
// earlier rotations, their direction is pure noise, and the relative
// orthogonality test can otherwise chase that noise without terminating.
void jacobi_orthogonalize(Columns& a, Columns& v) {
    const int m = a.m;
    const int n = a.n;

    double frob2 = 0.0;
    for (int j = 0; j < n; ++j) frob2 += dot(a.col(j), a.col(j), m);
    const double snap2 = frob2 * (kSnapTol * kSnapTol);

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double* ap = a.col(p);
                double* aq = a.col(q);
                const double alpha = dot(ap, ap, m);
                const double beta = dot(aq, aq, m);
                if (alpha <= snap2 || beta <= snap2) {
                    if (alpha <= snap2) std::fill(ap, ap + m, 0.0);
                    if (beta <= snap2) std::fill(aq, aq + m, 0.0);
                    continue;
                }
                const double gamma = dot(ap, aq, m);
                if (std::abs(gamma) <= kOrthoTol * std::sqrt(alpha * beta)) continue;
                rotated = true;

                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;

                for (int i = 0; i < m; ++i) {
                    const double x = ap[i];
                    const double y = aq[i];
                    ap[i] = c * x - s * y;
                    aq[i] = s * x + c * y;
                }
                double* vp = v.col(p);
                double* vq = v.col(q);
                for (int i = 0; i < n; ++i) {
                    const double x = vp[i];
                    const double y = vq[i];
                    vp[i] = c * x - s * y;
                    vq[i] = s * x + c * y;
                }
            }
        }
        if (!rotated) return;
    }
    throw std::runtime_error("svd: Jacobi iteration did not converge");
}

// Fills exactly-zero columns of u with unit vectors orthonormal to all
// other columns (needed for rank-deficient input, e.g. the zero matrix).
void complete_basis(Columns& u, const std::vector<double>& sigma) {
    const int m = u.m;
    const int n = u.n;
    for (int j = 0; j < n; ++j) {
        if (sigma[static_cast<std::size_t>(j)] != 0.0) continue;
        double* uj = u.col(j);
        for (int cand = 0; cand < m; ++cand) {
            std::vector<double> e(static_cast<std::size_t>(m), 0.0);
            e[static_cast<std::size_t>(cand)] = 1.0;
            for (int k = 0; k < n; ++k) {
                if (k == j) continue;
                const double proj = dot(e.data(), u.col(k), m);
                const double* uk = u.col(k);
                for (int i = 0; i < m; ++i) e[static_cast<std::size_t>(i)] -= proj * uk[i];
            }
            const double norm = std::sqrt(dot(e.data(), e.data(), m));
            if (norm > 0.5) {
                for (int i = 0; i < m; ++i) uj[i] = e[static_cast<std::size_t>(i)] / norm;
                break;
            }
        }
    }
}

Columns image_to_columns(const Image& img, bool transpose) {
    Columns c;
    if (!transpose) {
        c.m = img.height();
        c.n = img.width();
        c.data.resize(static_cast<std::size_t>(c.m) * static_cast<std::size_t>(c.n));
        for (int j = 0; j < c.n; ++j) {
            for (int i = 0; i < c.m; ++i) c.col(j)[i] = img(j, i);
        }
    } else {
        c.m = img.width();
        c.n = img.height();
        c.data.resize(static_cast<std::size_t>(c.m) * static_cast<std::size_t>(c.n));
        for (int j = 0; j < c.n; ++j) {
            for (int i = 0; i < c.m; ++i) c.col(j)[i] = img(i, j);
        }
    }
    return c;
}

// Columns (m x n) -> Image with n columns and m rows.
Image columns_to_image(const Columns& c) {
    Image img(c.n, c.m);
    for (int j = 0; j < c.n; ++j) {
        for (int i = 0; i < c.m; ++i) img(j, i) = c.col(j)[i];
    }
    return img;
}

}  // namespace

SvdFactors svd(const Image& matrix) {
    for (double v : matrix.pixels()) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("svd: matrix has non-finite entries");
        }
    }

    const int rows = matrix.height();
    const int cols = matrix.width();
    const bool transposed = rows < cols;  // work with m >= n internally

    Columns a = image_to_columns(matrix, transposed);
    const int m = a.m;
    const int n = a.n;
    Columns v{n, n, std::vector<double>(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0)};
    for (int j = 0; j < n; ++j) v.col(j)[j] = 1.0;

    jacobi_orthogonalize(a, v);

    std::vector<double> sigma(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        double* aj = a.col(j);
        const double norm = std::sqrt(dot(aj, aj, m));
        sigma[static_cast<std::size_t>(j)] = norm;
        if (norm > 0.0) {
            for (int i = 0; i < m; ++i) aj[i] /= norm;
        }
    }

    // Sort descending; ties keep the lower original index first.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&sigma](int x, int y) {
        return sigma[static_cast<std::size_t>(x)] > sigma[static_cast<std::size_t>(y)];
    });

    Columns us{m, n, std::vector<double>(a.data.size())};
    Columns vs{n, n, std::vector<double>(v.data.size())};
    std::vector<double> ss(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const int src = order[static_cast<std::size_t>(j)];
        std::copy(a.col(src), a.col(src) + m, us.col(j));
        std::copy(v.col(src), v.col(src) + n, vs.col(j));
        ss[static_cast<std::size_t>(j)] = sigma[static_cast<std::size_t>(src)];
    }

    complete_basis(us, ss);

    // Sign convention: largest-magnitude entry of each U column non-negative.
    for (int j = 0; j < n; ++j) {
        double* uj = us.col(j);
        int arg = 0;
        for (int i = 1; i < m; ++i) {
            if (std::abs(uj[i]) > std::abs(uj[arg])) arg = i;
        }
        if (uj[arg] < 0.0) {
            for (int i = 0; i < m; ++i) uj[i] = -uj[i];
            double* vj = vs.col(j);
            for (int i = 0; i < n; ++i) vj[i] = -vj[i];
        }
    }

    if (!transposed) {
        return SvdFactors{columns_to_image(us), std::move(ss), columns_to_image(vs), rows, cols};
    }
    // A^T = U' S V'^T  =>  A = V' S U'^T.
    return SvdFactors{columns_to_image(vs), std::move(ss), columns_to_image(us), rows, cols};
}

Image reconstruct(const SvdFactors& factors) {
    const int m = factors.rows;
    const int n = factors.cols;
    const int k = static_cast<int>(factors.sigma.size());
    if (factors.u.height() != m || factors.u.width() != k || factors.v.height() != n ||
        factors.v.width() != k) {
        throw std::invalid_argument("reconstruct: factor dimensions do not match");
    }
    Image out(n, m, 0.0);
    for (int t = 0; t < k; ++t) {
        const double s = factors.sigma[static_cast<std::size_t>(t)];
        if (s == 0.0) continue;
        for (int i = 0; i < m; ++i) {
            const double us = factors.u(t, i) * s;
            for (int j = 0; j < n; ++j) {
                out(j, i) += us * factors.v(t, j);
            }
        }
    }
    return out;
}

double max_singular_value(const Image& matrix) {
    const SvdFactors factors = svd(matrix);
    return factors.sigma.empty() ? 0.0 : factors.sigma.front();
}

Image scale_singular_values(const SvdFactors& factors, double xi) {
    if (!(xi > 0.0)) {
        throw std::invalid_argument("scale_singular_values: scale must be positive");
    }
    SvdFactors scaled = factors;
    for (double& s : scaled.sigma) s *= xi;
    return reconstruct(scaled);
}

}  // namespace wisp
