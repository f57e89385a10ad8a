#include "meandim/info.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace meandim {

void check_normalized(const ProbMeasure& p, double tol) {
    double s = 0.0;
    for (double v : p) {
        if (v < -tol) throw std::invalid_argument("probability vector: negative mass");
        s += v;
    }
    if (std::abs(s - 1.0) > tol)
        throw std::invalid_argument("probability vector: not normalized");
}

double entropy_bits(const ProbMeasure& p) {
    double h = 0.0;
    for (double v : p)
        if (v > 0.0) h -= v * std::log2(v);
    return h;
}

double mutual_information(const JointDist& joint) {
    const size_t nx = joint.size();
    if (nx == 0) throw std::invalid_argument("mutual_information: empty joint");
    const size_t ny = joint[0].size();
    ProbMeasure px(nx, 0.0), py(ny, 0.0);
    double total = 0.0;
    for (size_t x = 0; x < nx; ++x)
        for (size_t y = 0; y < ny; ++y) {
            double v = joint[x][y];
            if (v < -1e-12) throw std::invalid_argument("mutual_information: negative mass");
            px[x] += v;
            py[y] += v;
            total += v;
        }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("mutual_information: joint not normalized");
    double mi = 0.0;
    for (size_t x = 0; x < nx; ++x)
        for (size_t y = 0; y < ny; ++y) {
            double v = joint[x][y];
            if (v > 0.0) mi += v * std::log2(v / (px[x] * py[y]));
        }
    return std::max(mi, 0.0);
}

double kl_divergence(const ProbMeasure& p, const ProbMeasure& q) {
    if (p.size() != q.size()) throw std::invalid_argument("kl_divergence: size mismatch");
    check_normalized(p, 1e-9);
    check_normalized(q, 1e-9);
    double d = 0.0;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0.0) continue;
        if (q[i] <= 0.0)
            throw std::invalid_argument("kl_divergence: support(p) not within support(q)");
        d += p[i] * std::log2(p[i] / q[i]);
    }
    return d;
}

KlBoundCheck lemma_kl_bound_check(const ProbMeasure& p, const std::vector<double>& a,
                                  double eps) {
    if (p.size() != a.size()) throw std::invalid_argument("lemma_kl_bound_check: size mismatch");
    check_normalized(p, 1e-9);
    double lhs = 0.0, z = 0.0;
    double li = std::log2(1.0 / eps);
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] > 0.0) lhs += -p[i] * std::log2(p[i]) + p[i] * a[i] * li;
        z += std::pow(1.0 / eps, a[i]);
    }
    double rhs = std::log2(z);
    return {lhs, rhs, lhs <= rhs + 1e-9};
}

namespace {

struct BAState {
    double rate;
    double distortion;
    int iterations;
    bool converged;
};

BAState ba_fixed_slope(const ProbMeasure& mu, const std::vector<std::vector<double>>& rho,
                       double beta, const BAOptions& opts) {
    const size_t n = mu.size(), k = rho[0].size();
    std::vector<double> q(k, 1.0 / k);
    std::vector<std::vector<double>> nu(n, std::vector<double>(k, 0.0));
    double prev_rate = std::numeric_limits<double>::infinity();
    double prev_lagr = std::numeric_limits<double>::infinity();
    BAState st{0.0, 0.0, 0, false};
    for (int it = 0; it < opts.max_iterations; ++it) {
        ++st.iterations;
        for (size_t x = 0; x < n; ++x) {
            double z = 0.0;
            for (size_t y = 0; y < k; ++y) {
                nu[x][y] = q[y] * std::exp2(-beta * rho[x][y]);
                z += nu[x][y];
            }
            for (size_t y = 0; y < k; ++y) nu[x][y] /= z;
        }
        std::fill(q.begin(), q.end(), 0.0);
        for (size_t x = 0; x < n; ++x)
            for (size_t y = 0; y < k; ++y) q[y] += mu[x] * nu[x][y];
        double rate = 0.0, dist = 0.0;
        for (size_t x = 0; x < n; ++x)
            for (size_t y = 0; y < k; ++y) {
                double v = mu[x] * nu[x][y];
                if (v > 0.0 && q[y] > 0.0) rate += v * std::log2(nu[x][y] / q[y]);
                dist += v * rho[x][y];
            }
        double lagr = rate + beta * dist;
        if (lagr > prev_lagr + 1e-7)
            throw std::logic_error("blahut_arimoto: Lagrangian increased");
        st.rate = std::max(rate, 0.0);
        st.distortion = dist;
        if (std::abs(prev_rate - rate) < opts.rate_tol) {
            st.converged = true;
            break;
        }
        prev_rate = rate;
        prev_lagr = lagr;
    }
    return st;
}

}  // namespace

RDRow blahut_arimoto_point(const ProbMeasure& mu, const std::vector<std::vector<double>>& rho,
                           double target_distortion, const BAOptions& opts) {
    check_normalized(mu, 1e-9);
    if (rho.empty() || rho[0].empty())
        throw std::invalid_argument("blahut_arimoto: empty distortion matrix");
    const size_t n = mu.size(), k = rho[0].size();
    // zero-rate distortion: best single codeword
    double d0 = std::numeric_limits<double>::infinity();
    for (size_t y = 0; y < k; ++y) {
        double d = 0.0;
        for (size_t x = 0; x < n; ++x) d += mu[x] * rho[x][y];
        d0 = std::min(d0, d);
    }
    if (target_distortion >= d0)
        return {target_distortion, 0.0, 0.0, 0, true};

    // bracket the Lagrange slope: distortion is nonincreasing in beta
    double beta_lo = 0.0, beta_hi = 1.0;
    BAState lo = ba_fixed_slope(mu, rho, beta_lo, opts);
    // at beta = 0 BA sits at rate 0 with some distortion >= d0
    BAState hi = ba_fixed_slope(mu, rho, beta_hi, opts);
    int total_it = lo.iterations + hi.iterations;
    bool all_conv = lo.converged && hi.converged;
    int doubles = 0;
    while (hi.distortion > target_distortion && doubles < 60) {
        beta_hi *= 2.0;
        hi = ba_fixed_slope(mu, rho, beta_hi, opts);
        total_it += hi.iterations;
        all_conv = all_conv && hi.converged;
        ++doubles;
    }
    if (hi.distortion > target_distortion)
        return {target_distortion, hi.rate, beta_hi, total_it, false};
    for (int it = 0; it < 80; ++it) {
        if (std::abs(hi.distortion - target_distortion) < 1e-9) break;
        double mid = 0.5 * (beta_lo + beta_hi);
        BAState ms = ba_fixed_slope(mu, rho, mid, opts);
        total_it += ms.iterations;
        all_conv = all_conv && ms.converged;
        if (ms.distortion > target_distortion) {
            beta_lo = mid;
            lo = ms;
        } else {
            beta_hi = mid;
            hi = ms;
        }
        if (beta_hi - beta_lo < 1e-12) break;
    }
    // chord between the bracketing curve points: an upper bound on the
    // convex R(D) at the target
    double rate;
    if (lo.distortion > hi.distortion + 1e-15) {
        double t = (target_distortion - hi.distortion) / (lo.distortion - hi.distortion);
        t = std::clamp(t, 0.0, 1.0);
        rate = hi.rate + t * (lo.rate - hi.rate);
    } else {
        rate = hi.rate;
    }
    return {target_distortion, std::max(rate, 0.0), beta_hi, total_it, all_conv};
}

std::vector<std::vector<int>> orbit_codebook(const FiniteSystem& sys, int N) {
    std::vector<std::vector<int>> cb;
    for (int c = 0; c < sys.size(); ++c) {
        std::vector<int> word(N);
        int p = c;
        for (int t = 0; t < N; ++t) {
            word[t] = p;
            p = sys.time_map[p];
        }
        cb.push_back(std::move(word));
    }
    return cb;
}

RDCurve rate_distortion(const FiniteSystem& sys, const ProbMeasure& mu, int N,
                        const std::vector<double>& eps_list,
                        const std::vector<std::vector<int>>& codebook,
                        const BAOptions& opts) {
    if (N < 1) throw std::invalid_argument("rate_distortion: N < 1");
    if (codebook.empty()) throw std::invalid_argument("rate_distortion: empty codebook");
    check_normalized(mu, 1e-9);
    const int n = sys.size();
    std::vector<std::vector<double>> rho(n, std::vector<double>(codebook.size(), 0.0));
    for (int x = 0; x < n; ++x)
        for (size_t c = 0; c < codebook.size(); ++c) {
            if (static_cast<int>(codebook[c].size()) != N)
                throw std::invalid_argument("rate_distortion: codeword length != N");
            double s = 0.0;
            int p = x;
            for (int t = 0; t < N; ++t) {
                s += sys.dist.at(p, codebook[c][t]);
                p = sys.time_map[p];
            }
            rho[x][c] = s / N;
        }
    RDCurve curve;
    for (double eps : eps_list) {
        double target = eps * (1.0 - opts.distortion_margin);
        RDRow row = blahut_arimoto_point(mu, rho, target, opts);
        row.eps = eps;
        row.rate /= N;  // bits per iterate
        curve.rows.push_back(row);
    }
    return curve;
}

RdimEstimate rdim_estimate(const RDCurve& curve) {
    std::vector<std::pair<double, double>> pts;  // (log2(1/eps), R)
    for (const auto& r : curve.rows)
        if (r.eps < 1.0 && r.eps > 0.0) pts.emplace_back(std::log2(1.0 / r.eps), r.rate);
    if (pts.size() < 3) throw std::invalid_argument("rdim_estimate: insufficient grid");
    RdimEstimate est{-std::numeric_limits<double>::infinity(),
                     std::numeric_limits<double>::infinity(), 0.0, false};
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, R] : pts) {
        double ratio = R / x;
        est.upper = std::max(est.upper, ratio);
        est.lower = std::min(est.lower, ratio);
        sx += x; sy += R; sxx += x * x; sxy += x * R;
    }
    double k = static_cast<double>(pts.size());
    est.fit_slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    // finite resolution: rate stops growing at the smallest scales
    std::sort(pts.begin(), pts.end());
    if (std::abs(pts[pts.size() - 1].second - pts[pts.size() - 2].second) < 1e-9)
        est.saturated = true;
    return est;
}

namespace {

ProbMeasure random_simplex(std::mt19937_64& rng, size_t n) {
    std::exponential_distribution<double> ed(1.0);
    ProbMeasure p(n);
    double s = 0.0;
    for (auto& v : p) { v = ed(rng); s += v; }
    for (auto& v : p) v /= s;
    return p;
}

double mi_of_channel(const ProbMeasure& mu, const std::vector<ProbMeasure>& nu) {
    JointDist joint(mu.size(), ProbMeasure(nu[0].size(), 0.0));
    for (size_t x = 0; x < mu.size(); ++x)
        for (size_t y = 0; y < nu[x].size(); ++y) joint[x][y] = mu[x] * nu[x][y];
    return mutual_information(joint);
}

}  // namespace

LemmaSuiteReport info_property_checks(uint64_t seed, int instances, double tol) {
    std::mt19937_64 rng(seed);
    LemmaSuiteReport rep;
    const size_t NX = 4, NY = 5, NZ = 3;

    for (int i = 0; i < instances; ++i) {
        // data-processing: I(X; f(Y)) <= I(X;Y)
        ProbMeasure flat = random_simplex(rng, NX * NY);
        JointDist joint(NX, ProbMeasure(NY));
        for (size_t x = 0; x < NX; ++x)
            for (size_t y = 0; y < NY; ++y) joint[x][y] = flat[x * NY + y];
        std::uniform_int_distribution<int> fz(0, static_cast<int>(NZ) - 1);
        std::vector<int> f(NY);
        for (auto& v : f) v = fz(rng);
        JointDist mapped(NX, ProbMeasure(NZ, 0.0));
        for (size_t x = 0; x < NX; ++x)
            for (size_t y = 0; y < NY; ++y) mapped[x][f[y]] += joint[x][y];
        ++rep.dpi_checked;
        if (mutual_information(mapped) > mutual_information(joint) + tol) ++rep.dpi_failures;
    }

    for (int i = 0; i < instances; ++i) {
        // subadditivity: X, Y conditionally independent given Z
        ProbMeasure pz = random_simplex(rng, NZ);
        std::vector<ProbMeasure> px_z, py_z;
        for (size_t z = 0; z < NZ; ++z) {
            px_z.push_back(random_simplex(rng, NX));
            py_z.push_back(random_simplex(rng, NX));
        }
        JointDist xy_z(NX * NX, ProbMeasure(NZ, 0.0));
        JointDist x_z(NX, ProbMeasure(NZ, 0.0)), y_z(NX, ProbMeasure(NZ, 0.0));
        for (size_t z = 0; z < NZ; ++z)
            for (size_t x = 0; x < NX; ++x)
                for (size_t y = 0; y < NX; ++y) {
                    double v = pz[z] * px_z[z][x] * py_z[z][y];
                    xy_z[x * NX + y][z] += v;
                    x_z[x][z] += v;
                    y_z[y][z] += v;
                }
        ++rep.subadd_checked;
        if (mutual_information(xy_z) >
            mutual_information(x_z) + mutual_information(y_z) + tol)
            ++rep.subadd_failures;
    }

    std::vector<double> ts = {0.25, 0.5, 0.75};
    for (int i = 0; i < instances; ++i) {
        ProbMeasure mu1 = random_simplex(rng, NX), mu2 = random_simplex(rng, NX);
        ProbMeasure mu = random_simplex(rng, NX);
        std::vector<ProbMeasure> nu, nu1, nu2;
        for (size_t x = 0; x < NX; ++x) {
            nu.push_back(random_simplex(rng, NY));
            nu1.push_back(random_simplex(rng, NY));
            nu2.push_back(random_simplex(rng, NY));
        }
        for (double t : ts) {
            ProbMeasure mix(NX);
            for (size_t x = 0; x < NX; ++x) mix[x] = (1 - t) * mu1[x] + t * mu2[x];
            ++rep.concavity_checked;
            if (mi_of_channel(mix, nu) <
                (1 - t) * mi_of_channel(mu1, nu) + t * mi_of_channel(mu2, nu) - tol)
                ++rep.concavity_failures;
            std::vector<ProbMeasure> numix(NX, ProbMeasure(NY));
            for (size_t x = 0; x < NX; ++x)
                for (size_t y = 0; y < NY; ++y)
                    numix[x][y] = (1 - t) * nu1[x][y] + t * nu2[x][y];
            ++rep.convexity_checked;
            if (mi_of_channel(mu, numix) >
                (1 - t) * mi_of_channel(mu, nu1) + t * mi_of_channel(mu, nu2) + tol)
                ++rep.convexity_failures;
        }
    }

    for (int i = 0; i < instances; ++i) {
        // continuity: joints converging in law give converging I
        ProbMeasure pf = random_simplex(rng, NX * NY), qf = random_simplex(rng, NX * NY);
        JointDist P(NX, ProbMeasure(NY)), Pk(NX, ProbMeasure(NY));
        for (size_t x = 0; x < NX; ++x)
            for (size_t y = 0; y < NY; ++y) P[x][y] = pf[x * NY + y];
        double base = mutual_information(P);
        double lambda = std::ldexp(1.0, -40);
        for (size_t x = 0; x < NX; ++x)
            for (size_t y = 0; y < NY; ++y)
                Pk[x][y] = (1 - lambda) * pf[x * NY + y] + lambda * qf[x * NY + y];
        ++rep.convergence_checked;
        if (std::abs(mutual_information(Pk) - base) > tol) ++rep.convergence_failures;
    }
    return rep;
}

}  // namespace meandim
