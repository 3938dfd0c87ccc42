#pragma once

#include <vector>

#include "tfan/vec.hpp"

namespace tfan {

// Row-major matrices of exact rationals. Everything here is plain Gaussian
// elimination; the matrices involved never exceed a handful of rows and
// columns (ambient dimensions are <= 4).
using QMat = std::vector<QVec>;

// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<size_t> rref(QMat& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rat inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline size_t rank(QMat m) { return rref(m).size(); }

// Basis of { x : M x = 0 }, each vector scaled to a primitive integer vector.
inline std::vector<ZVec> nullspace(QMat m, size_t cols) {
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<ZVec> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        QVec x(cols, Rat(0));
        x[f] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = (i < m.size()) ? -m[i][f] : Rat(0);
        basis.push_back(primitive(x));
    }
    return basis;
}

// Unique solution of a square nonsingular system M x = b.
inline QVec solve_square(QMat m, QVec b) {
    size_t n = m.size();
    for (size_t i = 0; i < n; ++i) m[i].push_back(b[i]);
    std::vector<size_t> pivots = rref(m);
    if (pivots.size() != n || (n > 0 && pivots.back() >= n))
        throw std::invalid_argument("singular system");
    QVec x(n);
    for (size_t i = 0; i < n; ++i) x[i] = m[i][n];
    return x;
}

inline Rat det(QMat m) {
    size_t n = m.size();
    Rat d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        Rat inv = 1 / m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] * inv;
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

}  // namespace tfan
