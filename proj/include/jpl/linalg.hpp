#pragma once

// Dense exact Gaussian elimination over Q(zeta_12).

#include "jpl/cyc12.hpp"

#include <optional>
#include <vector>

namespace jpl {

struct LinearSolution {
    std::vector<Cyc12> x;
    bool unique = true;
};

// Solve A x = b exactly. Returns nullopt when the system is inconsistent;
// unique = false when the solution space is positive-dimensional (free
// variables are set to zero).
inline std::optional<LinearSolution> solve_linear(std::vector<std::vector<Cyc12>> a,
                                                  std::vector<Cyc12> b) {
    size_t rows = a.size();
    size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<long> pivot_of_col(cols, -1);
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; c++) {
        size_t p = rank;
        while (p < rows && a[p][c].is_zero()) p++;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        std::swap(b[p], b[rank]);
        Cyc12 inv = a[rank][c].inverse();
        for (size_t j = c; j < cols; j++) a[rank][j] *= inv;
        b[rank] *= inv;
        for (size_t r = 0; r < rows; r++) {
            if (r == rank || a[r][c].is_zero()) continue;
            Cyc12 f = a[r][c];
            for (size_t j = c; j < cols; j++) a[r][j] -= f * a[rank][j];
            b[r] -= f * b[rank];
        }
        pivot_of_col[c] = static_cast<long>(rank);
        rank++;
    }
    for (size_t r = rank; r < rows; r++)
        if (!b[r].is_zero()) return std::nullopt;
    LinearSolution sol;
    sol.x.assign(cols, Cyc12(0));
    for (size_t c = 0; c < cols; c++) {
        if (pivot_of_col[c] >= 0)
            sol.x[c] = b[static_cast<size_t>(pivot_of_col[c])];
        else
            sol.unique = false;
    }
    return sol;
}

}  // namespace jpl
