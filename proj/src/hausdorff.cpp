#include "meandim/hausdorff.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>

namespace meandim {

namespace {

struct SetInfo {
    uint64_t mask;
    double diam;
    double sup_phi;
};

double set_weight(const SetInfo& s, const HausdorffQuery& q) {
    return pow_conv(std::max(s.diam, q.tau), q.s - s.sup_phi);
}

SetInfo info_for(const Matrix& d, const std::vector<double>& phi, uint64_t mask) {
    SetInfo s{mask, 0.0, -std::numeric_limits<double>::infinity()};
    std::vector<int> pts;
    for (uint64_t t = mask; t;) {
        pts.push_back(std::countr_zero(t));
        t &= t - 1;
    }
    for (size_t a = 0; a < pts.size(); ++a) {
        s.sup_phi = std::max(s.sup_phi, phi[pts[a]]);
        for (size_t b = a + 1; b < pts.size(); ++b)
            s.diam = std::max(s.diam, d.at(pts[a], pts[b]));
    }
    return s;
}

// All subsets of maximal eps-cliques. The content weight depends on each
// set's own diameter, so maximal cliques alone are not enough here.
std::vector<SetInfo> content_candidates(const Matrix& d, const std::vector<double>& phi,
                                        double eps) {
    std::set<uint64_t> masks;
    for (uint64_t c : maximal_clique_masks(d, eps)) {
        // enumerate nonempty subsets of c
        std::vector<int> pts;
        for (uint64_t t = c; t;) {
            pts.push_back(std::countr_zero(t));
            t &= t - 1;
        }
        const size_t k = pts.size();
        for (uint64_t sub = 1; sub < (1ULL << k); ++sub) {
            uint64_t m = 0;
            for (size_t b = 0; b < k; ++b)
                if (sub & (1ULL << b)) m |= 1ULL << pts[b];
            masks.insert(m);
        }
    }
    for (int i = 0; i < d.size(); ++i) masks.insert(1ULL << i);
    std::vector<SetInfo> out;
    out.reserve(masks.size());
    for (uint64_t m : masks) out.push_back(info_for(d, phi, m));
    return out;
}

double exact_content(const Matrix& d, const std::vector<SetInfo>& cands,
                     const HausdorffQuery& q) {
    const int n = d.size();
    const size_t full = (1ULL << n) - 1;
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dp(full + 1, inf);
    dp[0] = 0.0;
    std::vector<std::vector<int>> by_lowest(n);
    for (size_t c = 0; c < cands.size(); ++c)
        for (uint64_t t = cands[c].mask; t;) {
            by_lowest[std::countr_zero(t)].push_back(static_cast<int>(c));
            t &= t - 1;
        }
    std::vector<double> w(cands.size());
    for (size_t c = 0; c < cands.size(); ++c) w[c] = set_weight(cands[c], q);
    for (uint64_t s = 0; s < full; ++s) {
        if (dp[s] == inf) continue;
        int lowest = std::countr_zero(~s);
        for (int ci : by_lowest[lowest]) {
            uint64_t ns = s | cands[ci].mask;
            double v = dp[s] + w[ci];
            if (v < dp[ns]) dp[ns] = v;
        }
    }
    return dp[full];
}

double greedy_content(const Matrix& d, const std::vector<SetInfo>& cands,
                      const HausdorffQuery& q) {
    const int n = d.size();
    std::vector<char> covered(n, 0);
    int remaining = n;
    double total = 0.0;
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
            double r = set_weight(cands[c], q) / nw;
            if (r < best_ratio) { best_ratio = r; best = static_cast<int>(c); }
        }
        for (uint64_t t = cands[best].mask; t;) {
            int v = std::countr_zero(t);
            t &= t - 1;
            if (!covered[v]) { covered[v] = 1; --remaining; }
        }
        total += set_weight(cands[best], q);
    }
    return total;
}

}  // namespace

double hausdorff_content(const Matrix& d, const std::vector<double>& phi,
                         const HausdorffQuery& q, CoverMode mode, int exact_budget) {
    if (q.eps <= 0.0) throw std::invalid_argument("hausdorff_content: eps <= 0");
    double max_phi = *std::max_element(phi.begin(), phi.end());
    if (q.s < max_phi - 1e-12)
        throw std::invalid_argument("hausdorff_content: s below max potential");
    const int n = d.size();
    if (mode == CoverMode::Exact && n > exact_budget)
        throw std::invalid_argument("hausdorff_content: exact-search budget exceeded");
    auto cands = content_candidates(d, phi, q.eps);
    return mode == CoverMode::Exact ? exact_content(d, cands, q)
                                    : greedy_content(d, cands, q);
}

double dim_at_scale(const Matrix& d, const std::vector<double>& phi, double eps,
                    double tau, CoverMode mode, int exact_budget) {
    if (eps <= 0.0) throw std::invalid_argument("dim_at_scale: eps <= 0");
    // monotone bisection needs every effective diameter <= 1
    if (tau > 1.0 || (eps > 1.0 && d.max_entry() > 1.0))
        throw std::runtime_error("dim_at_scale: nonmonotone content (diameter > 1)");
    double max_phi = *std::max_element(phi.begin(), phi.end());
    auto content = [&](double s) {
        return hausdorff_content(d, phi, {s, eps, tau}, mode, exact_budget);
    };
    const double tol = 1e-6;
    double lo = max_phi;
    if (content(lo) < 1.0) return max_phi;  // only the convention term survives
    double hi;
    if (tau > 0.0)
        hi = max_phi + log2_safe(static_cast<double>(d.size())) / log2_safe(1.0 / tau) + 1.0;
    else
        hi = max_phi + tol;  // singleton covers have zero cost for any s > max phi
    if (content(hi) >= 1.0) return hi;
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (content(mid) >= 1.0)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

std::vector<MeanHausdorffRow> mean_hausdorff_profile(
    const FiniteSystem& sys, const Potential& phi,
    const std::vector<double>& eps_grid, int N_max, MetricKind kind, double tau,
    CoverMode mode, int exact_budget) {
    std::vector<MeanHausdorffRow> rows;
    for (int N = 1; N <= N_max; ++N) {
        Matrix dN = (kind == MetricKind::Max) ? bowen_metric(sys, N)
                                              : average_metric(sys, N);
        Potential SN = birkhoff_sum(sys, phi, N);
        double t = tau;
        if (t < 0.0) {
            // automatic grain: smallest positive pairwise distance at this N
            t = 0.0;
            for (int i = 0; i < sys.size(); ++i)
                for (int j = i + 1; j < sys.size(); ++j) {
                    double v = dN.at(i, j);
                    if (v > 0.0 && (t == 0.0 || v < t)) t = v;
                }
        }
        for (double eps : eps_grid) {
            double dim = dim_at_scale(dN, SN.values, eps, t, mode, exact_budget);
            rows.push_back({N, eps, dim / N, t});
        }
    }
    return rows;
}

}  // namespace meandim
