#ifndef MEANDIM_INFO_HPP
#define MEANDIM_INFO_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "meandim/spaces.hpp"

namespace meandim {

using ProbMeasure = std::vector<double>;  // nonnegative, sums to 1
using JointDist = std::vector<std::vector<double>>;

void check_normalized(const ProbMeasure& p, double tol = 1e-12);

double entropy_bits(const ProbMeasure& p);

// I(X;Y) = H(X) + H(Y) - H(X,Y) in bits, 0 log(0/a) = 0.
double mutual_information(const JointDist& joint);

// D(p||q) in bits; throws if support(p) is not contained in support(q).
double kl_divergence(const ProbMeasure& p, const ProbMeasure& q);

struct KlBoundCheck {
    double lhs;
    double rhs;
    bool ok;
};

// sum_i (-p_i log p_i + p_i a_i log(1/eps)) <= log sum_i (1/eps)^{a_i}.
KlBoundCheck lemma_kl_bound_check(const ProbMeasure& p, const std::vector<double>& a,
                                  double eps);

struct RDRow {
    double eps;          // distortion level
    double rate;         // bits per iterate
    double slope_param;  // Lagrange multiplier
    int iterations;
    bool converged;
};

struct RDCurve {
    std::vector<RDRow> rows;
};

struct BAOptions {
    int max_iterations = 5000;
    double rate_tol = 1e-6;
    double distortion_margin = 1e-6;  // target eps*(1 - margin) for the strict < eps
};

// Blahut-Arimoto over an explicit source/codebook distortion matrix.
// rho[x][y] is the per-symbol distortion. Returns rate in bits at average
// distortion <= target (one point of the R(D) curve).
RDRow blahut_arimoto_point(const ProbMeasure& mu, const std::vector<std::vector<double>>& rho,
                           double target_distortion, const BAOptions& opts = {});

// Default orbit codebook: reproduction words (c, Tc, ..., T^{N-1}c) for c in X.
std::vector<std::vector<int>> orbit_codebook(const FiniteSystem& sys, int N);

RDCurve rate_distortion(const FiniteSystem& sys, const ProbMeasure& mu, int N,
                        const std::vector<double>& eps_list,
                        const std::vector<std::vector<int>>& codebook,
                        const BAOptions& opts = {});

struct RdimEstimate {
    double upper;
    double lower;
    double fit_slope;
    bool saturated;  // finite resolution reached inside the grid
};

RdimEstimate rdim_estimate(const RDCurve& curve);

struct LemmaSuiteReport {
    int dpi_checked = 0, dpi_failures = 0;
    int subadd_checked = 0, subadd_failures = 0;
    int concavity_checked = 0, concavity_failures = 0;
    int convexity_checked = 0, convexity_failures = 0;
    int convergence_checked = 0, convergence_failures = 0;
    bool all_ok() const {
        return dpi_failures + subadd_failures + concavity_failures +
                   convexity_failures + convergence_failures == 0;
    }
};

// Numeric verification of the data-processing inequality, subadditivity
// under conditional independence, concavity/convexity interpolations and
// continuity under perturbation, on randomized instances.
LemmaSuiteReport info_property_checks(uint64_t seed, int instances_per_lemma = 500,
                                      double tol = 1e-9);

}  // namespace meandim

#endif
