#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rational.hpp"

namespace skewroot {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;  // row-major, rectangular

/// Gauss-Jordan reduction to reduced row echelon form, exact over Q.
/// Returns the pivot column of each pivot row, in order.
inline std::vector<std::size_t> rref(QMat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        const Rational inv_p = Rational(1) / m[row][col];
        for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv_p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            const Rational factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(QMat m) { return rref(m).size(); }

/// Exact solution of a*x = b with free variables set to zero.
/// Returns nullopt when the system is inconsistent.
inline std::optional<QVec> solve(const QMat& a, const QVec& b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    QMat aug(rows, QVec(cols + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) aug[r][c] = a[r][c];
        aug[r][cols] = b[r];
    }
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    QVec x(cols, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
    return x;
}

/// Like solve(), but requires the solution to be unique (full column rank).
inline std::optional<QVec> solve_unique(const QMat& a, const QVec& b) {
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    QMat copy = a;
    if (rref(copy).size() != cols) return std::nullopt;
    return solve(a, b);
}

/// Basis of { x : a*x = 0 }, one vector per free column of the rref.
inline std::vector<QVec> nullspace(const QMat& a) {
    QMat m = a;
    const auto pivots = rref(m);
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<QVec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVec v(cols, Rational(0));
        v[free] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace skewroot
