#include "meandim/nerve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>

namespace meandim {

bool NerveComplex::is_simplex(uint64_t mask) const {
    if (mask == 0) return false;
    for (uint64_t c : carrier)
        if ((mask & c) == mask) return true;
    return false;
}

int NerveComplex::local_dim(int x) const {
    uint64_t sigma = carrier[x];
    int best = std::popcount(sigma) - 1;
    for (uint64_t c : maximal_carriers)
        if ((sigma & c) == sigma) best = std::max(best, std::popcount(c) - 1);
    return best;
}

int NerveComplex::small_local_dim(int x) const {
    return std::popcount(carrier[x]) - 1;
}

Cover build_cover_for_scale(const Matrix& d, const std::vector<double>& phi,
                            double eps, CoverStrategy strategy) {
    if (eps <= 0.0) throw std::invalid_argument("build_cover_for_scale: eps <= 0");
    const int n = d.size();
    Cover cover;
    if (strategy == CoverStrategy::Cliques) {
        for (uint64_t m : maximal_clique_masks(d, eps)) {
            std::vector<int> pts;
            for (uint64_t t = m; t;) {
                pts.push_back(std::countr_zero(t));
                t &= t - 1;
            }
            cover.sets.push_back(make_cover_set(d, phi, pts));
        }
    } else {
        const double r = 0.5 * eps * (1.0 - std::ldexp(1.0, -20));
        std::set<std::vector<int>> seen;
        for (int c = 0; c < n; ++c) {
            std::vector<int> pts;
            for (int j = 0; j < n; ++j)
                if (d.at(c, j) <= r) pts.push_back(j);
            if (seen.insert(pts).second)
                cover.sets.push_back(make_cover_set(d, phi, pts));
        }
    }
    return cover;
}

NerveComplex nerve_of(const Cover& cover, int point_count) {
    const int k = static_cast<int>(cover.sets.size());
    if (k > 64) throw std::invalid_argument("nerve_of: more than 64 cover sets");
    NerveComplex nc;
    nc.vertex_count = k;
    nc.carrier.assign(point_count, 0);
    for (int s = 0; s < k; ++s)
        for (int p : cover.sets[s].pts) nc.carrier[p] |= 1ULL << s;
    for (int p = 0; p < point_count; ++p)
        if (nc.carrier[p] == 0)
            throw std::invalid_argument("nerve_of: cover does not cover all points");
    // maximal carriers under inclusion
    for (int p = 0; p < point_count; ++p) {
        uint64_t c = nc.carrier[p];
        bool dominated = false;
        for (int q = 0; q < point_count && !dominated; ++q)
            if (q != p && (nc.carrier[q] & c) == c && nc.carrier[q] != c) dominated = true;
        if (!dominated &&
            std::find(nc.maximal_carriers.begin(), nc.maximal_carriers.end(), c) ==
                nc.maximal_carriers.end())
            nc.maximal_carriers.push_back(c);
    }
    return nc;
}

double variation(const std::vector<double>& phi, const Matrix& d, double eps) {
    if (eps <= 0.0) throw std::invalid_argument("variation: eps <= 0");
    const int n = d.size();
    double v = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (d.at(i, j) < eps) v = std::max(v, std::abs(phi[i] - phi[j]));
    return v;
}

namespace {

double cover_objective(const Cover& cover, const Matrix& d,
                       const std::vector<double>& phi, WidimVariant variant) {
    NerveComplex nc = nerve_of(cover, d.size());
    double obj = -std::numeric_limits<double>::infinity();
    for (int x = 0; x < d.size(); ++x) {
        int dim = (variant == WidimVariant::Small) ? nc.small_local_dim(x)
                                                   : nc.local_dim(x);
        obj = std::max(obj, dim + phi[x]);
    }
    return obj;
}

bool still_covers(const Cover& cover, int drop, int n) {
    std::vector<char> covered(n, 0);
    for (size_t s = 0; s < cover.sets.size(); ++s) {
        if (static_cast<int>(s) == drop) continue;
        for (int p : cover.sets[s].pts) covered[p] = 1;
    }
    for (int p = 0; p < n; ++p)
        if (!covered[p]) return false;
    return true;
}

// Drop sets while the objective does not increase (essential-map cleanup
// plus hill climbing over the candidate family).
Cover prune_cover(Cover cover, const Matrix& d, const std::vector<double>& phi,
                  WidimVariant variant) {
    bool improved = true;
    while (improved && cover.sets.size() > 1) {
        improved = false;
        double current = cover_objective(cover, d, phi, variant);
        for (size_t s = 0; s < cover.sets.size(); ++s) {
            if (!still_covers(cover, static_cast<int>(s), d.size())) continue;
            Cover trial = cover;
            trial.sets.erase(trial.sets.begin() + s);
            if (cover_objective(trial, d, phi, variant) <= current) {
                cover = std::move(trial);
                improved = true;
                break;
            }
        }
    }
    return cover;
}

}  // namespace

WidimPair widim_upper_pair(const Matrix& d, const std::vector<double>& phi,
                           double eps) {
    if (eps <= 0.0) throw std::invalid_argument("widim_upper: eps <= 0");
    const int n = d.size();
    // one shared pool of candidate covers for both variants, so the
    // small <= standard <= small + var chain holds cover by cover
    std::vector<Cover> pool;
    {
        Cover c;
        for (int i = 0; i < n; ++i) c.sets.push_back(make_cover_set(d, phi, {i}));
        pool.push_back(std::move(c));
    }
    pool.push_back(build_cover_for_scale(d, phi, eps, CoverStrategy::Cliques));
    pool.push_back(build_cover_for_scale(d, phi, eps, CoverStrategy::Balls));
    // greedy weighted subcover biased toward few, cheap sets
    pool.push_back(covering_number(d, phi, eps, CoverMode::Greedy).cover);
    const size_t base = pool.size();
    for (size_t i = 0; i < base; ++i) {
        pool.push_back(prune_cover(pool[i], d, phi, WidimVariant::Small));
        pool.push_back(prune_cover(pool[i], d, phi, WidimVariant::Standard));
    }

    WidimPair best;
    best.small.value = std::numeric_limits<double>::infinity();
    best.standard.value = std::numeric_limits<double>::infinity();
    for (const auto& cover : pool) {
        double so = cover_objective(cover, d, phi, WidimVariant::Small);
        double to = cover_objective(cover, d, phi, WidimVariant::Standard);
        if (so < best.small.value) {
            best.small.value = so;
            best.small.witness = cover;
        }
        if (to < best.standard.value) {
            best.standard.value = to;
            best.standard.witness = cover;
        }
    }
    return best;
}

WidimResult widim_upper(const Matrix& d, const std::vector<double>& phi,
                        double eps, WidimVariant variant) {
    WidimPair p = widim_upper_pair(d, phi, eps);
    return variant == WidimVariant::Small ? p.small : p.standard;
}

double MdimProfile::small_upper(double eps) const {
    double v = std::numeric_limits<double>::infinity();
    for (const auto& r : rows)
        if (r.eps == eps) v = std::min(v, r.small_rate);
    return v;
}

double MdimProfile::standard_upper(double eps) const {
    double v = std::numeric_limits<double>::infinity();
    for (const auto& r : rows)
        if (r.eps == eps) v = std::min(v, r.standard_rate);
    return v;
}

MdimProfile mdim_profile(const FiniteSystem& sys, const Potential& phi,
                         const std::vector<double>& eps_grid, int N_max) {
    MdimProfile prof;
    for (int N = 1; N <= N_max; ++N) {
        Matrix dN = bowen_metric(sys, N);
        Potential SN = birkhoff_sum(sys, phi, N);
        for (double eps : eps_grid) {
            WidimPair p = widim_upper_pair(dN, SN.values, eps);
            prof.rows.push_back({N, eps, p.small.value / N, p.standard.value / N});
        }
    }
    return prof;
}

}  // namespace meandim
