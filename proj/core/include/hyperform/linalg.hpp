#pragma once

#include <vector>

#include "hyperform/error.hpp"

namespace hyperform {

/// Dense exact matrix over a field K (rows of equal length).
template <class K>
struct Matrix {
    std::vector<std::vector<K>> rows;

    int nrows() const { return static_cast<int>(rows.size()); }
    int ncols() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
};

/// In-place reduced row echelon form; returns the pivot column of each
/// pivot row (rank = pivots.size()).
template <class K>
std::vector<int> rref(Matrix<K>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.ncols() && r < m.nrows(); ++c) {
        int sel = -1;
        for (int i = r; i < m.nrows(); ++i)
            if (!is_zero(m.rows[i][c])) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(m.rows[r], m.rows[sel]);
        K inv = m.rows[r][c];
        for (auto& v : m.rows[r]) v = v / inv;
        for (int i = 0; i < m.nrows(); ++i) {
            if (i == r || is_zero(m.rows[i][c])) continue;
            K f = m.rows[i][c];
            for (int j = c; j < m.ncols(); ++j)
                m.rows[i][j] = m.rows[i][j] - f * m.rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class K>
int rank(Matrix<K> m) {
    return static_cast<int>(rref(m).size());
}

/// Basis of the right nullspace of m, one vector per non-pivot column,
/// in reduced echelon convention (free column's entry = 1).
template <class K>
std::vector<std::vector<K>> nullspace(Matrix<K> m, const K& one) {
    int n = m.ncols();
    auto pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<K>> out;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<K> v(n, K{});
        v[c] = one;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            if (pivots[r] < n) v[pivots[r]] = -m.rows[r][c];
        }
        out.push_back(std::move(v));
    }
    return out;
}

/// Solve m*x = rhs; returns false if inconsistent. Free variables are 0.
template <class K>
bool solve(Matrix<K> m, std::vector<K> rhs, std::vector<K>& x, const K& one) {
    int n = m.ncols();
    for (int i = 0; i < m.nrows(); ++i) m.rows[i].push_back(rhs[i]);
    auto pivots = rref(m);
    x.assign(n, K{});
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == n) return false; // pivot in the rhs column
        x[pivots[r]] = m.rows[r][n];
    }
    return true;
}

} // namespace hyperform
