#pragma once

// Exact linear algebra over Q: reduced row echelon form with per-row
// content stripping (keeps entry growth in check), right-kernel bases, and
// unique solves.  No floating point.

#include <optional>
#include <vector>

#include "etamod/rational.hpp"

namespace etamod {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

namespace detail {

// Divides a row by the gcd of its numerators times lcm of denominators,
// producing primitive integer entries.  No-op on zero rows.
inline void strip_row_content(RationalVector& row) {
    Integer g = 0, l = 1;
    for (const auto& v : row) {
        g = gcd(g, v.get_num());
        l = lcm(l, v.get_den());
    }
    if (g == 0) return;
    Rational scale = rational(l, g);
    for (auto& v : row) v *= scale;
}

}  // namespace detail

// In-place RREF; returns pivot column per pivot row.
inline std::vector<size_t> rref(RationalMatrix& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        Rational inv_pivot = Rational(1) / m[row][col];
        for (size_t j = col; j < cols; ++j) m[row][j] *= inv_pivot;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rational factor = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= factor * m[row][j];
            detail::strip_row_content(m[i]);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Scales a vector to coprime integer entries with positive first nonzero.
inline void normalize_kernel_vector(RationalVector& v) {
    detail::strip_row_content(v);
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
}

// Basis of the right kernel {v : M v = 0}.  Full-rank matrices give an
// empty basis.
inline RationalMatrix nullspace(RationalMatrix m) {
    if (m.empty()) throw std::domain_error("nullspace of empty matrix");
    size_t cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols) throw std::domain_error("ragged matrix");
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    RationalMatrix basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(cols, Rational(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free] / m[r][pivots[r]];
        normalize_kernel_vector(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Unique solution of A x = b, if it exists and is unique.
inline std::optional<RationalVector> solve_unique(const RationalMatrix& a, const RationalVector& b) {
    if (a.empty() || a.size() != b.size()) throw std::domain_error("dimension mismatch");
    size_t cols = a[0].size();
    RationalMatrix aug = a;
    for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    std::vector<size_t> pivots = rref(aug);
    // Inconsistent if a pivot lands in the augmented column.
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    if (pivots.size() != cols) return std::nullopt;  // underdetermined
    RationalVector x(cols);
    for (size_t r = 0; r < cols; ++r) x[pivots[r]] = aug[r][cols] / aug[r][pivots[r]];
    return x;
}

// Exact check M v = 0.
inline bool kernel_vector_checks(const RationalMatrix& m, const RationalVector& v) {
    for (const auto& row : m) {
        Rational dot(0);
        for (size_t j = 0; j < row.size(); ++j) dot += row[j] * v[j];
        if (dot != 0) return false;
    }
    return true;
}

}  // namespace etamod
