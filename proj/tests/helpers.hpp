#ifndef MEANDIM_TEST_HELPERS_HPP
#define MEANDIM_TEST_HELPERS_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "meandim/core.hpp"
#include "meandim/spaces.hpp"

namespace testutil {

using meandim::FiniteSystem;
using meandim::Matrix;

// n random points on a circle-ish configuration: pairwise distances from
// planar coordinates (always a metric), time map a random permutation.
inline FiniteSystem random_system(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    std::vector<double> px(n), py(n);
    for (int i = 0; i < n; ++i) {
        px[i] = ud(rng);
        py[i] = ud(rng);
    }
    FiniteSystem sys;
    sys.dist = Matrix(n);
    for (int i = 0; i < n; ++i) {
        sys.points.push_back("p" + std::to_string(i));
        for (int j = 0; j < n; ++j)
            sys.dist.at(i, j) = std::hypot(px[i] - px[j], py[i] - py[j]);
    }
    sys.time_map.resize(n);
    for (int i = 0; i < n; ++i) sys.time_map[i] = i;
    std::shuffle(sys.time_map.begin(), sys.time_map.end(), rng);
    sys.label = "random" + std::to_string(n);
    return sys;
}

inline std::vector<double> random_potential(std::mt19937_64& rng, int n, double hi = 1.0) {
    std::uniform_real_distribution<double> ud(0.0, hi);
    std::vector<double> phi(n);
    for (double& v : phi) v = ud(rng);
    return phi;
}

inline double subset_diam(const Matrix& d, std::uint64_t mask) {
    double diam = 0.0;
    for (int i = 0; i < d.size(); ++i) {
        if (!(mask >> i & 1)) continue;
        for (int j = i + 1; j < d.size(); ++j)
            if (mask >> j & 1) diam = std::max(diam, d.at(i, j));
    }
    return diam;
}

inline double subset_sup(const std::vector<double>& phi, std::uint64_t mask) {
    double s = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < phi.size(); ++i)
        if (mask >> i & 1) s = std::max(s, phi[i]);
    return s;
}

// Minimum of sum(weight(E)) over covers by arbitrary subsets with
// diam < eps; independent of the library's candidate generation. n <= 8.
template <class WeightFn>
double oracle_min_cover(const Matrix& d, double eps, WeightFn weight) {
    const int n = d.size();
    const std::uint64_t full = (1ULL << n) - 1;
    std::vector<std::uint64_t> sets;
    std::vector<double> w;
    for (std::uint64_t m = 1; m <= full; ++m) {
        if (subset_diam(d, m) < eps) {
            sets.push_back(m);
            w.push_back(weight(m));
        }
    }
    std::vector<double> dp(full + 1, std::numeric_limits<double>::infinity());
    dp[0] = 0.0;
    for (std::uint64_t s = 0; s < full; ++s) {
        if (!std::isfinite(dp[s])) continue;
        int low = std::countr_zero(~s);
        for (size_t k = 0; k < sets.size(); ++k) {
            if (!(sets[k] >> low & 1)) continue;
            std::uint64_t ns = s | sets[k];
            dp[ns] = std::min(dp[ns], dp[s] + w[k]);
        }
    }
    return dp[full];
}

inline double oracle_covering_number(const Matrix& d, const std::vector<double>& phi,
                                     double eps) {
    return oracle_min_cover(d, eps, [&](std::uint64_t m) {
        return std::pow(1.0 / eps, subset_sup(phi, m));
    });
}

inline double oracle_hausdorff_content(const Matrix& d, const std::vector<double>& phi,
                                       double s, double eps, double tau) {
    return oracle_min_cover(d, eps, [&](std::uint64_t m) {
        return meandim::pow_conv(std::max(subset_diam(d, m), tau),
                                 s - subset_sup(phi, m));
    });
}

}  // namespace testutil

#endif
