#include "pfaff/matrixq.hpp"

#include <stdexcept>
#include <utility>

namespace pfaff {

QMatrix zero_matrix(size_t rows, size_t cols) {
    return QMatrix(rows, std::vector<GaussianRational>(cols));
}

QMatrix identity_matrix(size_t n) {
    QMatrix a = zero_matrix(n, n);
    for (size_t i = 0; i < n; ++i) a[i][i] = GaussianRational(1);
    return a;
}

QMatrix transpose(const QMatrix& a) {
    if (a.empty()) return {};
    QMatrix r = zero_matrix(a[0].size(), a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
    return r;
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
    if (a.empty() || b.empty()) return {};
    if (a[0].size() != b.size()) throw std::invalid_argument("matrix product shape mismatch");
    QMatrix r = zero_matrix(a.size(), b[0].size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

GaussianRational det_bareiss(QMatrix a) {
    size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0) return GaussianRational(1);
    int sign = 1;
    GaussianRational prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return GaussianRational(0);
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = GaussianRational(0);
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

size_t rank_gauss(QMatrix a) {
    size_t rows = a.size();
    if (rows == 0) return 0;
    size_t cols = a[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        GaussianRational inv = GaussianRational(1) / a[rank][col];
        for (size_t j = col; j < cols; ++j) a[rank][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][col].is_zero()) continue;
            GaussianRational factor = a[i][col];
            for (size_t j = col; j < cols; ++j) a[i][j] -= factor * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace pfaff
