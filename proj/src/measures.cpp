#include "meandim/measures.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "meandim/lp.hpp"

namespace meandim {

ProbMeasure product_measure(const SymbolicModel& model, const ProbMeasure& symbol_weights) {
    check_normalized(symbol_weights, 1e-9);
    const int m = static_cast<int>(model.alphabet_values.size());
    if (static_cast<int>(symbol_weights.size()) != m)
        throw std::invalid_argument("product_measure: weight/alphabet size mismatch");
    long long count = 1;
    for (int s = 0; s < model.period; ++s) count *= m;
    ProbMeasure mu(count);
    for (long long idx = 0; idx < count; ++idx) {
        double w = 1.0;
        long long t = idx;
        for (int s = 0; s < model.period; ++s) {
            w *= symbol_weights[t % m];
            t /= m;
        }
        mu[idx] = w;
    }
    return mu;
}

ProbMeasure top_interval_weights(const std::vector<double>& grid, int k) {
    if (k < 1) throw std::invalid_argument("top_interval_weights: k < 1");
    const int m = static_cast<int>(grid.size());
    const double lo = 1.0 - 1.0 / k;
    ProbMeasure w(m, 0.0);
    for (int j = 0; j < m; ++j) {
        double cell_lo = (j == 0) ? 0.0 : 0.5 * (grid[j - 1] + grid[j]);
        double cell_hi = (j == m - 1) ? 1.0 : 0.5 * (grid[j] + grid[j + 1]);
        double overlap = std::max(0.0, std::min(cell_hi, 1.0) - std::max(cell_lo, lo));
        w[j] = k * overlap;
    }
    double s = 0.0;
    for (double v : w) s += v;
    for (double& v : w) v /= s;  // clean up boundary rounding
    return w;
}

double integrate(const Potential& phi, const ProbMeasure& mu) {
    if (phi.values.size() != mu.size())
        throw std::invalid_argument("integrate: size mismatch");
    double s = 0.0;
    for (size_t i = 0; i < mu.size(); ++i) s += phi.values[i] * mu[i];
    return s;
}

ProbMeasure pushforward(const FiniteSystem& sys, const ProbMeasure& mu) {
    ProbMeasure out(mu.size(), 0.0);
    for (size_t i = 0; i < mu.size(); ++i) out[sys.time_map[i]] += mu[i];
    return out;
}

ProbMeasure empirical_average(const FiniteSystem& sys, const ProbMeasure& nu, long long n) {
    if (n < 1) throw std::invalid_argument("empirical_average: n < 1");
    ProbMeasure acc(nu.size(), 0.0), cur = nu;
    for (long long m = 0; m < n; ++m) {
        for (size_t i = 0; i < cur.size(); ++i) acc[i] += cur[i];
        if (m + 1 < n) cur = pushforward(sys, cur);
    }
    for (double& v : acc) v /= static_cast<double>(n);
    return acc;
}

namespace {

double set_diam(const Matrix& d, const std::vector<int>& pts) {
    double diam = 0.0;
    for (size_t a = 0; a < pts.size(); ++a)
        for (size_t b = a + 1; b < pts.size(); ++b)
            diam = std::max(diam, d.at(pts[a], pts[b]));
    return diam;
}

std::vector<int> mask_points(uint64_t mask) {
    std::vector<int> pts;
    for (uint64_t t = mask; t;) {
        pts.push_back(std::countr_zero(t));
        t &= t - 1;
    }
    return pts;
}

}  // namespace

FrostmanResult frostman_measure(const Matrix& d, double s, double delta, double tau,
                                ConstraintFamily family, int subset_budget) {
    if (tau < 0.0) throw std::invalid_argument("frostman_measure: negative grain");
    if (delta <= 0.0) throw std::invalid_argument("frostman_measure: delta <= 0");
    const int n = d.size();
    std::set<uint64_t> masks;
    if (family == ConstraintFamily::Subsets) {
        if (n > subset_budget)
            throw std::invalid_argument("frostman_measure: subset-family budget exceeded");
        for (uint64_t m = 1; m < (1ULL << n); ++m)
            if (set_diam(d, mask_points(m)) < delta) masks.insert(m);
        // a subset with the same diameter as a superset is redundant
        std::vector<uint64_t> all(masks.begin(), masks.end());
        std::vector<double> diams(all.size());
        for (size_t i = 0; i < all.size(); ++i) diams[i] = set_diam(d, mask_points(all[i]));
        for (size_t i = 0; i < all.size(); ++i)
            for (size_t j = 0; j < all.size(); ++j)
                if (i != j && (all[i] & all[j]) == all[i] && all[i] != all[j] &&
                    diams[i] == diams[j]) {
                    masks.erase(all[i]);
                    break;
                }
    } else {
        std::set<double> radii;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) radii.insert(d.at(i, j));
        for (int c = 0; c < n; ++c)
            for (double r : radii) {
                uint64_t m = 0;
                for (int j = 0; j < n; ++j)
                    if (d.at(c, j) <= r) m |= 1ULL << j;
                if (set_diam(d, mask_points(m)) < delta) masks.insert(m);
            }
        for (int i = 0; i < n; ++i) masks.insert(1ULL << i);
    }
    if (masks.size() > 8192)
        throw std::invalid_argument("frostman_measure: constraint family too large");

    FrostmanResult res;
    res.s = s;
    res.delta = delta;
    res.tau = tau;
    std::vector<std::vector<double>> A;
    std::vector<double> b;
    for (uint64_t m : masks) {
        std::vector<int> pts = mask_points(m);
        std::vector<double> row(n, 0.0);
        for (int p : pts) row[p] = 1.0;
        A.push_back(std::move(row));
        double diam = set_diam(d, pts);
        b.push_back(pow_conv(tau + diam, s));
        res.constraint_sets.push_back(pts);
        res.constraint_bounds.push_back(b.back());
    }
    LpResult lp = solve_lp_max(A, b, std::vector<double>(n, 1.0));
    if (!lp.optimal) throw std::runtime_error("frostman_measure: LP did not solve");
    res.lp_value = lp.value;
    res.dual_cover_value = 0.0;
    for (size_t i = 0; i < b.size(); ++i) res.dual_cover_value += lp.dual[i] * b[i];
    res.normalizable = lp.value >= 1.0;
    res.measure = lp.x;
    if (res.normalizable && lp.value > 0.0)
        for (double& v : res.measure) v /= lp.value;
    return res;
}

}  // namespace meandim
