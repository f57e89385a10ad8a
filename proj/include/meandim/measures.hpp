#ifndef MEANDIM_MEASURES_HPP
#define MEANDIM_MEASURES_HPP

#include <vector>

#include "meandim/info.hpp"
#include "meandim/spaces.hpp"

namespace meandim {

// Product (Bernoulli) measure on a full period-p symbolic model from
// per-symbol weights; shift-invariant by construction.
ProbMeasure product_measure(const SymbolicModel& model, const ProbMeasure& symbol_weights);

// Quantization of the uniform law on [1 - 1/k, 1] onto the model grid:
// each grid point receives the mass of its half-open cell.
ProbMeasure top_interval_weights(const std::vector<double>& grid, int k);

double integrate(const Potential& phi, const ProbMeasure& mu);

ProbMeasure pushforward(const FiniteSystem& sys, const ProbMeasure& mu);

// (1/n) sum_{m<n} T^m_* nu; exactly invariant at n = lcm of orbit lengths.
ProbMeasure empirical_average(const FiniteSystem& sys, const ProbMeasure& nu, long long n);

enum class ConstraintFamily { Balls, Subsets };

struct FrostmanResult {
    ProbMeasure measure;       // normalized when normalizable, else the raw optimum
    double s = 0.0, delta = 0.0, tau = 0.0;
    double lp_value = 0.0;          // max total mass
    double dual_cover_value = 0.0;  // min fractional cover, same family
    bool normalizable = false;      // lp_value >= 1
    std::vector<std::vector<int>> constraint_sets;
    std::vector<double> constraint_bounds;  // (tau + diam E)^s per set
};

// max total mass subject to mu(E) <= (tau + diam E)^s over all family sets
// with diam < delta; the dual is the min fractional cover of the same
// weights. Subsets mode enumerates every subset and needs n <= subset_budget.
FrostmanResult frostman_measure(const Matrix& d, double s, double delta, double tau,
                                ConstraintFamily family, int subset_budget = 15);

struct TransportPlan {
    std::vector<std::vector<double>> pi;
    double cost = 0.0;
};

// Exact min-cost coupling of p and q (transportation simplex).
TransportPlan optimal_coupling(const ProbMeasure& p, const ProbMeasure& q,
                               const Matrix& cost);

}  // namespace meandim

#endif
