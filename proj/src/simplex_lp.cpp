#include "meandim/lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace meandim {

LpResult solve_lp_max(const std::vector<std::vector<double>>& A,
                      const std::vector<double>& b, const std::vector<double>& c,
                      double tol) {
    const int m = static_cast<int>(A.size());
    const int n = static_cast<int>(c.size());
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(A[i].size()) != n)
            throw std::invalid_argument("solve_lp_max: ragged constraint matrix");
        if (b[i] < -tol) throw std::invalid_argument("solve_lp_max: negative rhs");
    }
    // tableau: m rows of [A | I | b], objective row of reduced costs
    const int width = n + m + 1;
    std::vector<std::vector<double>> t(m + 1, std::vector<double>(width, 0.0));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) t[i][j] = A[i][j];
        t[i][n + i] = 1.0;
        t[i][width - 1] = std::max(b[i], 0.0);
    }
    for (int j = 0; j < n; ++j) t[m][j] = -c[j];
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;

    const long iter_cap = 50L * (m + n) * (m + n) + 1000;
    for (long iter = 0;; ++iter) {
        if (iter > iter_cap) throw std::runtime_error("solve_lp_max: iteration cap hit");
        const bool bland = iter > 4L * (m + n);
        int pivot_col = -1;
        double best = -tol;
        for (int j = 0; j < n + m; ++j) {
            if (t[m][j] < (bland ? -tol : best)) {
                pivot_col = j;
                if (bland) break;
                best = t[m][j];
            }
        }
        if (pivot_col < 0) break;  // optimal
        int pivot_row = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) {
            if (t[i][pivot_col] <= tol) continue;
            double ratio = t[i][width - 1] / t[i][pivot_col];
            if (ratio < best_ratio - tol ||
                (ratio < best_ratio + tol && pivot_row >= 0 &&
                 basis[i] < basis[pivot_row])) {
                best_ratio = ratio;
                pivot_row = i;
            }
        }
        if (pivot_row < 0) return {};  // unbounded
        double pv = t[pivot_row][pivot_col];
        for (int j = 0; j < width; ++j) t[pivot_row][j] /= pv;
        for (int i = 0; i <= m; ++i) {
            if (i == pivot_row) continue;
            double f = t[i][pivot_col];
            if (f == 0.0) continue;
            for (int j = 0; j < width; ++j) t[i][j] -= f * t[pivot_row][j];
        }
        basis[pivot_row] = pivot_col;
    }

    LpResult res;
    res.optimal = true;
    res.value = t[m][width - 1];
    res.x.assign(n, 0.0);
    for (int i = 0; i < m; ++i)
        if (basis[i] < n) res.x[basis[i]] = t[i][width - 1];
    res.dual.assign(m, 0.0);
    for (int i = 0; i < m; ++i) res.dual[i] = std::max(t[m][n + i], 0.0);
    return res;
}

}  // namespace meandim
