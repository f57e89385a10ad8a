#include "meandim/hilbert_example.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "meandim/measures.hpp"
#include "meandim/spaces.hpp"

namespace meandim {

HilbertReport example_hilbert(int m, int p, int W, const std::vector<int>& ks,
                              std::vector<double> rd_eps_grid, double pressure_eps) {
    if (m < 2) throw std::invalid_argument("example_hilbert: m < 2");
    if (p < 1 || W < 0) throw std::invalid_argument("example_hilbert: bad period/window");
    HilbertReport rep;
    rep.m = m;
    rep.p = p;
    rep.W = W;

    std::vector<double> grid = uniform_grid(m);
    std::vector<double> w(p, 0.0);
    for (int n = -W; n <= W; ++n) w[((n % p) + p) % p] += std::ldexp(1.0, -std::abs(n));
    for (double v : w) rep.omega += v;
    const double gap = 1.0 / (m - 1);

    rep.pressure_eps = pressure_eps > 0.0 ? pressure_eps : 1.0 / m;
    // any two distinct points are w_0 * gap apart under the p-step Bowen
    // metric (shift the differing coordinate onto the full-weight residue)
    rep.pressure_exact = w[0] * gap >= rep.pressure_eps;
    {
        double g = 0.0;
        for (double v : grid) g += std::pow(1.0 / rep.pressure_eps, v);
        const double lg = std::log2(g), lm = std::log2(static_cast<double>(m));
        rep.pressure_rate = std::numeric_limits<double>::infinity();
        // singleton covers factorize: # = G^N * m^(p-N) for N <= p
        for (int N = 1; N <= p; ++N) {
            double rate = (N * lg + (p - N) * lm) / N;
            if (rate < rep.pressure_rate) {
                rep.pressure_rate = rate;
                rep.pressure_N = N;
            }
        }
        rep.pressure_ratio = rep.pressure_rate / std::log2(1.0 / rep.pressure_eps);
    }

    if (rd_eps_grid.empty()) {
        const double hi = 0.195, lo = std::max(1.25 / m, 0.04);
        const int steps = 5;
        for (int i = 0; i < steps; ++i)
            rd_eps_grid.push_back(hi * std::pow(lo / hi, i / double(steps - 1)));
    }
    rep.rd_eps_grid = rd_eps_grid;

    // separable metric + product measure: the N = p block problem decouples
    // into p identical scalar sources with cost (omega/p)|u - v| and a
    // per-coordinate distortion share of eps/p
    std::vector<std::vector<double>> rho(m, std::vector<double>(m));
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) rho[u][v] = rep.omega / p * std::abs(grid[u] - grid[v]);

    for (int k : ks) {
        HilbertMeasureRow row;
        row.k = k;
        ProbMeasure q = top_interval_weights(grid, k);
        for (int j = 0; j < m; ++j) row.integral += q[j] * grid[j];
        row.integral_target = 1.0 - 0.5 / k;
        for (double eps : rd_eps_grid) {
            RDRow r = blahut_arimoto_point(q, rho, eps / p * (1.0 - 1e-6));
            r.eps = eps;
            row.curve.rows.push_back(r);
        }
        RdimEstimate est = rdim_estimate(row.curve);
        row.rdim_fit = est.fit_slope;
        row.rdim_upper = est.upper;
        row.rdim_saturated = est.saturated;
        row.sum = row.rdim_fit + row.integral;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace meandim
