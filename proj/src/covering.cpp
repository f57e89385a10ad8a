#include "meandim/covering.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>

namespace meandim {

namespace {

void bron_kerbosch(uint64_t R, uint64_t P, uint64_t X,
                   const std::vector<uint64_t>& adj, std::vector<uint64_t>& out) {
    if (P == 0 && X == 0) {
        out.push_back(R);
        return;
    }
    // pivot: vertex of P|X maximizing |P & adj|
    uint64_t PX = P | X;
    int pivot = -1, best = -1;
    for (uint64_t m = PX; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        int deg = std::popcount(P & adj[v]);
        if (deg > best) { best = deg; pivot = v; }
    }
    uint64_t cand = P & ~adj[pivot];
    for (uint64_t m = cand; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        uint64_t vb = 1ULL << v;
        bron_kerbosch(R | vb, P & adj[v], X & adj[v], adj, out);
        P &= ~vb;
        X |= vb;
    }
}

std::vector<int> mask_to_pts(uint64_t mask) {
    std::vector<int> pts;
    for (uint64_t m = mask; m;) {
        pts.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return pts;
}

}  // namespace

std::vector<uint64_t> maximal_clique_masks(const Matrix& d, double eps) {
    const int n = d.size();
    if (n > 64) throw std::invalid_argument("maximal_clique_masks: more than 64 points");
    std::vector<uint64_t> adj(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && d.at(i, j) < eps) adj[i] |= 1ULL << j;
    std::vector<uint64_t> cliques;
    uint64_t all = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    bron_kerbosch(0, all, 0, adj, cliques);
    return cliques;
}

CoverSet make_cover_set(const Matrix& d, const std::vector<double>& phi,
                        const std::vector<int>& pts) {
    CoverSet s;
    s.pts = pts;
    s.diam = 0.0;
    s.sup_phi = -std::numeric_limits<double>::infinity();
    for (size_t a = 0; a < pts.size(); ++a) {
        s.sup_phi = std::max(s.sup_phi, phi[pts[a]]);
        for (size_t b = a + 1; b < pts.size(); ++b)
            s.diam = std::max(s.diam, d.at(pts[a], pts[b]));
    }
    return s;
}

namespace {

struct Candidate {
    uint64_t mask;
    double weight;
};

// Candidate family for the covering-number objective: for each maximal clique
// of the eps-threshold graph, every potential-threshold sub-clique
// {u in C : phi(u) <= phi(v)}, plus all singletons. Any cover set can be
// widened to the threshold sub-clique of its own sup without changing the
// weight, so this family always contains an optimal cover.
std::vector<Candidate> covering_candidates(const Matrix& d, const std::vector<double>& phi,
                                           double eps) {
    const int n = d.size();
    std::set<uint64_t> masks;
    for (uint64_t c : maximal_clique_masks(d, eps)) {
        for (uint64_t t = c; t;) {
            int v = std::countr_zero(t);
            t &= t - 1;
            uint64_t m = 0;
            for (uint64_t u = c; u;) {
                int w = std::countr_zero(u);
                u &= u - 1;
                if (phi[w] <= phi[v]) m |= 1ULL << w;
            }
            masks.insert(m);
        }
    }
    for (int i = 0; i < n; ++i) masks.insert(1ULL << i);
    std::vector<Candidate> out;
    out.reserve(masks.size());
    for (uint64_t m : masks) {
        double sup = -std::numeric_limits<double>::infinity();
        for (uint64_t t = m; t;) {
            int v = std::countr_zero(t);
            t &= t - 1;
            sup = std::max(sup, phi[v]);
        }
        out.push_back({m, std::pow(1.0 / eps, sup)});
    }
    return out;
}

CoveringResult exact_weighted_cover(const Matrix& d, const std::vector<double>& phi,
                                    double eps, const std::vector<Candidate>& cands) {
    const int n = d.size();
    const size_t full = (1ULL << n) - 1;
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dp(full + 1, inf);
    std::vector<int32_t> choice(full + 1, -1);
    std::vector<uint64_t> pred(full + 1, 0);
    dp[0] = 0.0;
    // group candidates by lowest covered point
    std::vector<std::vector<int>> by_lowest(n);
    for (size_t c = 0; c < cands.size(); ++c)
        for (uint64_t t = cands[c].mask; t;) {
            by_lowest[std::countr_zero(t)].push_back(static_cast<int>(c));
            t &= t - 1;
        }
    for (uint64_t s = 0; s < full; ++s) {
        if (dp[s] == inf) continue;
        int lowest = std::countr_zero(~s);
        for (int ci : by_lowest[lowest]) {
            uint64_t ns = s | cands[ci].mask;
            double v = dp[s] + cands[ci].weight;
            if (v < dp[ns]) {
                dp[ns] = v;
                choice[ns] = ci;
                pred[ns] = s;
            }
        }
    }
    CoveringResult res;
    res.value = dp[full];
    for (uint64_t s = full; s;) {
        int ci = choice[s];
        res.cover.sets.push_back(make_cover_set(d, phi, mask_to_pts(cands[ci].mask)));
        s = pred[s];
    }
    return res;
}

CoveringResult greedy_weighted_cover(const Matrix& d, const std::vector<double>& phi,
                                     const std::vector<Candidate>& cands) {
    const int n = d.size();
    std::vector<char> covered(n, 0);
    int remaining = n;
    CoveringResult res;
    res.value = 0.0;
    while (remaining > 0) {
        int best = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (size_t c = 0; c < cands.size(); ++c) {
            int nw = 0;
            for (uint64_t t = cands[c].mask; t;) {
                int v = std::countr_zero(t);
                t &= t - 1;
                if (!covered[v]) ++nw;
            }
            if (nw == 0) continue;
            double r = cands[c].weight / nw;
            if (r < best_ratio) { best_ratio = r; best = static_cast<int>(c); }
        }
        for (uint64_t t = cands[best].mask; t;) {
            int v = std::countr_zero(t);
            t &= t - 1;
            if (!covered[v]) { covered[v] = 1; --remaining; }
        }
        res.value += cands[best].weight;
        res.cover.sets.push_back(make_cover_set(d, phi, mask_to_pts(cands[best].mask)));
    }
    return res;
}

// Ball-based candidate sets for systems too large for clique enumeration.
CoveringResult greedy_ball_cover(const Matrix& d, const std::vector<double>& phi, double eps) {
    const int n = d.size();
    const double r = 0.5 * eps * (1.0 - std::ldexp(1.0, -20));
    std::vector<char> covered(n, 0);
    int remaining = n;
    CoveringResult res;
    res.value = 0.0;
    while (remaining > 0) {
        int best = -1, best_new = 0;
        double best_w = 0.0;
        for (int c = 0; c < n; ++c) {
            int nw = 0;
            double sup = -std::numeric_limits<double>::infinity();
            for (int j = 0; j < n; ++j)
                if (d.at(c, j) <= r) {
                    sup = std::max(sup, phi[j]);
                    if (!covered[j]) ++nw;
                }
            if (nw == 0) continue;
            double w = std::pow(1.0 / eps, sup);
            if (best < 0 || w / nw < best_w / best_new) {
                best = c;
                best_new = nw;
                best_w = w;
            }
        }
        std::vector<int> pts;
        for (int j = 0; j < n; ++j)
            if (d.at(best, j) <= r) {
                pts.push_back(j);
                if (!covered[j]) { covered[j] = 1; --remaining; }
            }
        res.value += best_w;
        res.cover.sets.push_back(make_cover_set(d, phi, pts));
    }
    return res;
}

}  // namespace

CoveringResult covering_number(const Matrix& d, const std::vector<double>& phi,
                               double eps, CoverMode mode, int exact_budget) {
    if (eps <= 0.0) throw std::invalid_argument("covering_number: eps <= 0");
    const int n = d.size();
    if (n == 0) throw std::invalid_argument("covering_number: empty system");
    if (mode == CoverMode::Exact) {
        if (n > exact_budget)
            throw std::invalid_argument("covering_number: exact-search budget exceeded");
        return exact_weighted_cover(d, phi, eps, covering_candidates(d, phi, eps));
    }
    if (n <= 64) return greedy_weighted_cover(d, phi, covering_candidates(d, phi, eps));
    return greedy_ball_cover(d, phi, eps);
}

double PressureProfile::pressure_upper(double eps) const {
    double inf = std::numeric_limits<double>::infinity();
    for (const auto& r : rows)
        if (r.eps == eps) inf = std::min(inf, r.rate);
    return inf;
}

std::vector<double> PressureProfile::eps_values() const {
    std::vector<double> v;
    for (const auto& r : rows)
        if (std::find(v.begin(), v.end(), r.eps) == v.end()) v.push_back(r.eps);
    return v;
}

PressureProfile pressure_profile(const FiniteSystem& sys, const Potential& phi,
                                 const std::vector<double>& eps_grid, int N_max,
                                 CoverMode mode, int exact_budget) {
    if (N_max < 1) throw std::invalid_argument("pressure_profile: N_max < 1");
    PressureProfile prof;
    for (int N = 1; N <= N_max; ++N) {
        Matrix dN = bowen_metric(sys, N);
        Potential SN = birkhoff_sum(sys, phi, N);
        for (double eps : eps_grid) {
            CoverMode m = mode;
            if (m == CoverMode::Exact && sys.size() > exact_budget) m = CoverMode::Greedy;
            auto res = covering_number(dN, SN.values, eps, m, exact_budget);
            double lc = log2_safe(res.value);
            prof.rows.push_back({N, eps, lc, lc / N, m});
        }
    }
    return prof;
}

MdimMEstimate mdim_M_estimate(const PressureProfile& profile) {
    auto eps_vals = profile.eps_values();
    if (eps_vals.size() < 3)
        throw std::invalid_argument("mdim_M_estimate: need >= 3 distinct eps values");
    std::sort(eps_vals.begin(), eps_vals.end(), std::greater<double>());
    MdimMEstimate est;
    est.upper_slope = -std::numeric_limits<double>::infinity();
    est.lower_slope = std::numeric_limits<double>::infinity();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int k = 0;
    double prev_p = std::numeric_limits<double>::quiet_NaN();
    for (double eps : eps_vals) {
        if (eps >= 1.0) continue;  // ratio undefined at eps >= 1
        double p = profile.pressure_upper(eps);
        double x = log2_safe(1.0 / eps);
        double ratio = p / x;
        est.upper_slope = std::max(est.upper_slope, ratio);
        est.lower_slope = std::min(est.lower_slope, ratio);
        sx += x; sy += p; sxx += x * x; sxy += x * p;
        ++k;
        // pressure stops moving once eps drops below the resolution of the model
        if (!std::isnan(prev_p) && std::abs(p - prev_p) < 1e-12 && !est.saturation_eps)
            est.saturation_eps = eps;
        if (!std::isnan(prev_p) && std::abs(p - prev_p) >= 1e-12)
            est.saturation_eps.reset();
        prev_p = p;
    }
    if (k < 3) throw std::invalid_argument("mdim_M_estimate: insufficient resolvable grid");
    est.fit_slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    return est;
}

FiniteSystem tame_metric_transform(const FiniteSystem& sys) {
    const int n = sys.size();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sys.points[a] < sys.points[b]; });
    FiniteSystem out = sys;
    out.label = sys.label + "+tame";
    out.dist = Matrix(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) {
                int anchor = order[k];
                s += std::ldexp(1.0, -(k + 1)) *
                     std::abs(sys.dist.at(i, anchor) - sys.dist.at(j, anchor));
            }
            out.dist.at(i, j) = out.dist.at(j, i) = s;
        }
    return out;
}

std::vector<TameGrowthRow> tame_growth_report(const FiniteSystem& sys,
                                              const std::vector<double>& delta_list,
                                              const std::vector<double>& eps_grid,
                                              CoverMode mode) {
    std::vector<double> zero(sys.size(), 0.0);
    std::vector<TameGrowthRow> rows;
    for (double delta : delta_list) {
        if (delta <= 0.0) throw std::invalid_argument("tame_growth_report: delta <= 0");
        for (double eps : eps_grid) {
            auto res = covering_number(sys.dist, zero, eps, mode);
            rows.push_back({delta, eps, std::pow(eps, delta) * log2_safe(res.value)});
        }
    }
    return rows;
}

}  // namespace meandim
