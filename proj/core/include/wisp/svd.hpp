#pragma once

#include <vector>

#include "wisp/image.hpp"

namespace wisp {

/// Economy-size singular value decomposition A = U diag(sigma) V^T.
///
/// An Image doubles as the dense real matrix type here: height() rows,
/// width() columns, entry (r, c) at image(c, r). With k = min(rows, cols),
/// `u` is rows x k and `v` is cols x k, both with orthonormal columns;
/// `sigma` is sorted descending and non-negative.
struct SvdFactors {
    Image u;
    std::vector<double> sigma;
    Image v;
    int rows;
    int cols;
};

/// Factors a finite-valued matrix by one-sided Jacobi rotations.
///
/// Sweeps run in a fixed cyclic order until every column pair is orthogonal
/// to 1e-12 relative, so results are deterministic for a given input.
/// Working columns smaller than 1e-13 of the Frobenius norm are treated as
/// exactly zero (their singular values report as 0 and the matching U
/// columns are filled with an orthonormal completion). Signs are normalized
/// so each column of U has its largest-magnitude entry non-negative. Throws
/// on non-finite input or if the iteration cap is hit.
SvdFactors svd(const Image& matrix);

/// U diag(sigma) V^T.
Image reconstruct(const SvdFactors& factors);

/// Largest singular value (spectral norm) of the matrix.
double max_singular_value(const Image& matrix);

/// U diag(xi * sigma) V^T for xi > 0. Algebraically equal to
/// xi * reconstruct(factors); the multiplication is carried out through the
/// factors rather than shortcut.
Image scale_singular_values(const SvdFactors& factors, double xi);

}  // namespace wisp
