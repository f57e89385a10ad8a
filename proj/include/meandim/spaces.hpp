#ifndef MEANDIM_SPACES_HPP
#define MEANDIM_SPACES_HPP

#include <string>
#include <vector>

#include "meandim/core.hpp"

namespace meandim {

// Finite metric model of a dynamical system: a point set with a bijective
// time map and a base metric.
struct FiniteSystem {
    std::vector<std::string> points;  // opaque ids
    Matrix dist;                      // base metric
    std::vector<int> time_map;        // T as an index permutation
    std::string label;

    int size() const { return static_cast<int>(points.size()); }

    // Throws std::invalid_argument on metric-axiom or bijection violations.
    void validate(double tol = 1e-9) const;

    int forward(int i, int steps) const;   // T^steps, steps >= 0
    int backward(int i, int steps) const;  // T^{-steps}, steps >= 0

    // Smallest strictly positive pairwise distance (0 for a 1-point system).
    double min_positive_distance() const;
};

// Full set of period-p sequences over a quantization grid, with the
// cyclic shift and the truncated weighted sum metric.
struct SymbolicModel {
    std::vector<double> alphabet_values;  // grid points in [0,1]
    int period = 1;
    int window = 16;  // truncation radius of the weighted sum

    // Tail neglected by truncating at |n| <= window, for coordinate gap 1.
    double tail_bound() const { return std::ldexp(2.0, -window); }
};

// Uniform m-level grid {j/(m-1)}, or {0} for m = 1.
std::vector<double> uniform_grid(int levels);

struct Potential {
    std::vector<double> values;
    std::string label;

    double max() const;
    double sup_norm() const;
};

Matrix bowen_metric(const FiniteSystem& sys, int N);
Matrix average_metric(const FiniteSystem& sys, int N);
Potential birkhoff_sum(const FiniteSystem& sys, const Potential& phi, int N);

// Throws on out-of-range alphabet values or when |alphabet|^period exceeds
// point_budget.
FiniteSystem build_symbolic(const SymbolicModel& model, int point_budget = 4096);

// Decode the coordinates of point index `idx` of a symbolic system.
std::vector<int> symbolic_digits(const SymbolicModel& model, int idx);

// Least common multiple of the orbit lengths of the time map.
long long orbit_lcm(const FiniteSystem& sys);

}  // namespace meandim

#endif
