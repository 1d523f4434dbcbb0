#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "gitstab/rational.hpp"

// Small dense exact linear algebra used by the map and classification code.
namespace gitstab::linalg {

using Matrix = std::vector<std::vector<Rat>>;

inline int rank(Matrix m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    int r = 0;
    for (size_t col = 0; col < cols && r < static_cast<int>(rows); ++col) {
        size_t pivot = rows;
        for (size_t i = r; i < rows; ++i)
            if (!m[i][col].is_zero()) { pivot = i; break; }
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        Rat inv = m[r][col].inverse();
        for (size_t j = col; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (static_cast<int>(i) == r || m[i][col].is_zero()) continue;
            Rat f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

// Solves A x = b exactly; empty when inconsistent. If the system is
// underdetermined the free variables are set to zero.
inline std::optional<std::vector<Rat>> solve(Matrix a, std::vector<Rat> b) {
    size_t rows = a.size();
    if (rows == 0 || b.size() != rows) throw std::invalid_argument("linalg::solve: bad shapes");
    size_t cols = a[0].size();
    std::vector<int> pivot_col;
    int r = 0;
    for (size_t col = 0; col < cols && r < static_cast<int>(rows); ++col) {
        size_t pivot = rows;
        for (size_t i = r; i < rows; ++i)
            if (!a[i][col].is_zero()) { pivot = i; break; }
        if (pivot == rows) continue;
        std::swap(a[r], a[pivot]);
        std::swap(b[r], b[pivot]);
        Rat inv = a[r][col].inverse();
        for (size_t j = col; j < cols; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (static_cast<int>(i) == r || a[i][col].is_zero()) continue;
            Rat f = a[i][col];
            for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (!b[i].is_zero()) return std::nullopt;
    std::vector<Rat> x(cols, Rat(0));
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return x;
}

inline Matrix inverse(const Matrix& a) {
    size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("linalg::inverse: not square");
    Matrix work = a, inv(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = Rat(1);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = n;
        for (size_t i = col; i < n; ++i)
            if (!work[i][col].is_zero()) { pivot = i; break; }
        if (pivot == n) throw std::invalid_argument("linalg::inverse: singular matrix");
        std::swap(work[col], work[pivot]);
        std::swap(inv[col], inv[pivot]);
        Rat s = work[col][col].inverse();
        for (size_t j = 0; j < n; ++j) { work[col][j] *= s; inv[col][j] *= s; }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || work[i][col].is_zero()) continue;
            Rat f = work[i][col];
            for (size_t j = 0; j < n; ++j) {
                work[i][j] -= f * work[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace gitstab::linalg
