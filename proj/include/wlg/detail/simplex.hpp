#ifndef WLG_DETAIL_SIMPLEX_HPP
#define WLG_DETAIL_SIMPLEX_HPP

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace wlg::detail {

/// Exact feasibility test for { x >= 0 : A x = b } by phase-one simplex over
/// the rationals with Bland's rule. `a` is row-major, rows x cols.
inline bool feasible_nonnegative(const std::vector<std::vector<mpq_class>>& a, const std::vector<mpq_class>& b)
{
    const std::size_t rows = a.size();
    if (rows == 0) {
        return true;
    }
    const std::size_t cols = a[0].size();
    const std::size_t width = cols + rows + 1; // structural, artificial, rhs
    std::vector<std::vector<mpq_class>> t(rows, std::vector<mpq_class>(width));
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < cols; ++j) {
            t[i][j] = flip ? mpq_class(-a[i][j]) : a[i][j];
        }
        t[i][cols + i] = 1;
        t[i][width - 1] = flip ? mpq_class(-b[i]) : b[i];
        basis[i] = cols + i;
    }

    // Reduced costs of the phase-one objective (sum of artificials).
    std::vector<mpq_class> cost(width);
    for (std::size_t j = 0; j < width; ++j) {
        if (j >= cols && j < cols + rows) {
            continue;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            cost[j] -= t[i][j];
        }
    }

    for (;;) {
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j) {
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == width) {
            break;
        }
        std::size_t leave = rows;
        mpq_class best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][enter] > 0) {
                mpq_class ratio = t[i][width - 1] / t[i][enter];
                if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
        }
        if (leave == rows) {
            break; // unbounded direction; cannot happen for phase one
        }
        const mpq_class pivot = t[leave][enter];
        for (auto& v : t[leave]) {
            v /= pivot;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter] == 0) {
                continue;
            }
            const mpq_class factor = t[i][enter];
            for (std::size_t j = 0; j < width; ++j) {
                if (t[leave][j] != 0) {
                    t[i][j] -= factor * t[leave][j];
                }
            }
        }
        if (cost[enter] != 0) {
            const mpq_class factor = cost[enter];
            for (std::size_t j = 0; j < width; ++j) {
                if (t[leave][j] != 0) {
                    cost[j] -= factor * t[leave][j];
                }
            }
        }
        basis[leave] = enter;
    }
    // The objective value is -cost[rhs]; feasible iff it reached zero.
    return cost[width - 1] == 0;
}

} // namespace wlg::detail

#endif // WLG_DETAIL_SIMPLEX_HPP
