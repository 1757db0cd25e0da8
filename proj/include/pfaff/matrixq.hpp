#pragma once

#include <cstddef>
#include <vector>

#include "pfaff/rational.hpp"

namespace pfaff {

/// Dense matrix over Q(i), row-major.
using QMatrix = std::vector<std::vector<GaussianRational>>;

QMatrix zero_matrix(size_t rows, size_t cols);
QMatrix identity_matrix(size_t n);
QMatrix transpose(const QMatrix& a);
QMatrix mat_mul(const QMatrix& a, const QMatrix& b);

/// Exact determinant by fraction-free (Bareiss) elimination.
GaussianRational det_bareiss(QMatrix a);

/// Exact rank by Gaussian elimination over the field Q(i).
size_t rank_gauss(QMatrix a);

}  // namespace pfaff
