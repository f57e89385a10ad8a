#ifndef MEANDIM_NERVE_HPP
#define MEANDIM_NERVE_HPP

#include <cstdint>
#include <vector>

#include "meandim/covering.hpp"
#include "meandim/spaces.hpp"

namespace meandim {

enum class CoverStrategy { Cliques, Balls };
enum class WidimVariant { Standard, Small };

// Nerve of a cover: vertices are cover sets, simplexes are subfamilies with
// a common point. Simplexes are exactly the subsets of the per-point
// carriers, so carriers determine the whole complex.
struct NerveComplex {
    int vertex_count = 0;
    std::vector<uint64_t> carrier;          // per point: sets containing it
    std::vector<uint64_t> maximal_carriers; // maximal under inclusion

    bool is_simplex(uint64_t mask) const;
    // dim at the carrier of point x: max |simplex| - 1 over simplexes
    // containing carrier(x)
    int local_dim(int x) const;
    // small local dim: |carrier(x)| - 1
    int small_local_dim(int x) const;
};

Cover build_cover_for_scale(const Matrix& d, const std::vector<double>& phi,
                            double eps, CoverStrategy strategy);

NerveComplex nerve_of(const Cover& cover, int point_count);

// sup of |phi(x)-phi(y)| over pairs with d(x,y) < eps.
double variation(const std::vector<double>& phi, const Matrix& d, double eps);

struct WidimResult {
    double value = 0.0;
    Cover witness;
};

struct WidimPair {
    WidimResult small;
    WidimResult standard;
};

// Upper bound on widim_eps (standard) or widim'_eps (small) over a finite
// candidate-cover family; the exact infimum over all complexes is not
// finitely enumerable. Both variants are minimized over the same pool so
// the small/standard inequality chain holds instance by instance.
WidimPair widim_upper_pair(const Matrix& d, const std::vector<double>& phi,
                           double eps);
WidimResult widim_upper(const Matrix& d, const std::vector<double>& phi,
                        double eps, WidimVariant variant);

struct MdimRow {
    int N;
    double eps;
    double small_rate;     // widim'_eps(d_N, S_N phi) / N
    double standard_rate;  // widim_eps(d_N, S_N phi) / N
};

struct MdimProfile {
    std::vector<MdimRow> rows;
    double small_upper(double eps) const;     // Fekete inf over N
    double standard_upper(double eps) const;
};

MdimProfile mdim_profile(const FiniteSystem& sys, const Potential& phi,
                         const std::vector<double>& eps_grid, int N_max);

}  // namespace meandim

#endif
