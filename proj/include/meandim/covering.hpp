#ifndef MEANDIM_COVERING_HPP
#define MEANDIM_COVERING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "meandim/spaces.hpp"

namespace meandim {

struct CoverSet {
    std::vector<int> pts;
    double diam = 0.0;
    double sup_phi = 0.0;
};

struct Cover {
    std::vector<CoverSet> sets;
};

enum class CoverMode { Exact, Greedy };

// All maximal cliques of the graph {d(x,y) < eps} (strict), via Bron-Kerbosch.
// Each clique has diameter < eps.
std::vector<uint64_t> maximal_clique_masks(const Matrix& d, double eps);

CoverSet make_cover_set(const Matrix& d, const std::vector<double>& phi,
                        const std::vector<int>& pts);

struct CoveringResult {
    double value = 0.0;
    Cover cover;
};

// Covering number with potential: min over covers by sets of diameter < eps
// of sum_i (1/eps)^{sup_{U_i} phi}. Exact mode requires n <= exact_budget.
CoveringResult covering_number(const Matrix& d, const std::vector<double>& phi,
                               double eps, CoverMode mode, int exact_budget = 20);

struct PressureRow {
    int N;
    double eps;
    double log_cov_bits;
    double rate;  // log_cov_bits / N
    CoverMode mode;
};

struct PressureProfile {
    std::vector<PressureRow> rows;

    // Fekete upper bound: inf over computed N of the rate at this eps.
    double pressure_upper(double eps) const;
    std::vector<double> eps_values() const;
};

PressureProfile pressure_profile(const FiniteSystem& sys, const Potential& phi,
                                 const std::vector<double>& eps_grid, int N_max,
                                 CoverMode mode = CoverMode::Exact,
                                 int exact_budget = 20);

struct MdimMEstimate {
    double upper_slope;  // max of P_est(eps)/log2(1/eps)
    double lower_slope;  // min of the same
    double fit_slope;    // least squares of P_est vs log2(1/eps)
    std::optional<double> saturation_eps;  // below this, finite resolution saturates
};

MdimMEstimate mdim_M_estimate(const PressureProfile& profile);

// d'(x,y) = sum_k 2^{-(k+1)} |d(x,x_k) - d(y,x_k)| over all points as anchors,
// enumerated in sorted id order.
FiniteSystem tame_metric_transform(const FiniteSystem& sys);

struct TameGrowthRow {
    double delta;
    double eps;
    double value;  // eps^delta * log2 #(X,d,eps)
};

std::vector<TameGrowthRow> tame_growth_report(const FiniteSystem& sys,
                                              const std::vector<double>& delta_list,
                                              const std::vector<double>& eps_grid,
                                              CoverMode mode = CoverMode::Greedy);

}  // namespace meandim

#endif
