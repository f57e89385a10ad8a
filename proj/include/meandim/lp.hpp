#ifndef MEANDIM_LP_HPP
#define MEANDIM_LP_HPP

#include <vector>

namespace meandim {

struct LpResult {
    bool optimal = false;  // false on unbounded
    double value = 0.0;
    std::vector<double> x;     // primal solution
    std::vector<double> dual;  // one multiplier per constraint row
};

// max c.x subject to A x <= b, x >= 0, with b >= 0 (phase-1 free).
// Dense tableau simplex, Bland's rule after a Dantzig warmup.
LpResult solve_lp_max(const std::vector<std::vector<double>>& A,
                      const std::vector<double>& b, const std::vector<double>& c,
                      double tol = 1e-12);

}  // namespace meandim

#endif
