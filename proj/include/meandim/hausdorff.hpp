#ifndef MEANDIM_HAUSDORFF_HPP
#define MEANDIM_HAUSDORFF_HPP

#include <vector>

#include "meandim/covering.hpp"
#include "meandim/spaces.hpp"

namespace meandim {

enum class MetricKind { Max, Average };

struct HausdorffQuery {
    double s = 0.0;    // exponent, must be >= max potential
    double eps = 0.0;  // cover mesh
    double tau = 0.0;  // grain: effective diameter is max(diam, tau)
};

// Min (exact) or upper bound (greedy) of
//   sum_i (max(diam E_i, tau))^{s - sup_{E_i} phi}
// over covers by sets of diameter < eps, with the 0^0 = 1 convention.
double hausdorff_content(const Matrix& d, const std::vector<double>& phi,
                         const HausdorffQuery& q, CoverMode mode,
                         int exact_budget = 20);

// Largest s >= max phi with content >= 1, bisected to 1e-6. Requires all
// effective diameters <= 1 so the content is nonincreasing in s.
double dim_at_scale(const Matrix& d, const std::vector<double>& phi, double eps,
                    double tau, CoverMode mode = CoverMode::Exact,
                    int exact_budget = 20);

struct MeanHausdorffRow {
    int N;
    double eps;
    double dim;       // dim_at_scale(d_N or dbar_N, S_N phi, eps) / N
    double tau_used;
};

// Full (N, eps) table of scale-dependent Hausdorff dimensions per iterate.
// tau < 0 selects the automatic grain (smallest positive pairwise distance
// of the per-N metric).
std::vector<MeanHausdorffRow> mean_hausdorff_profile(
    const FiniteSystem& sys, const Potential& phi,
    const std::vector<double>& eps_grid, int N_max, MetricKind kind,
    double tau = -1.0, CoverMode mode = CoverMode::Exact, int exact_budget = 20);

}  // namespace meandim

#endif
