#include <cmath>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "meandim/chain.hpp"
#include "meandim/config.hpp"
#include "meandim/covering.hpp"
#include "meandim/hausdorff.hpp"
#include "meandim/hilbert_example.hpp"
#include "meandim/info.hpp"
#include "meandim/measures.hpp"
#include "meandim/nerve.hpp"
#include "meandim/tiling.hpp"

namespace {

using namespace meandim;

int g_budget = 20;
std::uint64_t g_seed = 0;
int g_threads = 1;  // accepted for interface stability; computation is sequential

LoadedSystem load_system(const std::string& path) {
    return system_from_json(load_json_file(path));
}

int cmd_cover(const std::string& system_path, const std::string& phi_path,
              std::vector<double> eps, int n_max, bool greedy,
              const std::string& out) {
    LoadedSystem ls = load_system(system_path);
    Potential phi = potential_from_json(load_json_file(phi_path), ls);
    CoverMode mode = greedy ? CoverMode::Greedy : CoverMode::Exact;
    PressureProfile prof = pressure_profile(ls.sys, phi, eps, n_max, mode, g_budget);
    std::printf("N,eps,log_cov_bits,rate\n");
    for (const auto& r : prof.rows)
        std::printf("%d,%.10g,%.10g,%.10g\n", r.N, r.eps, r.log_cov_bits, r.rate);
    json j;
    for (const auto& r : prof.rows)
        j["rows"].push_back({{"N", r.N}, {"eps", r.eps}, {"bits", r.log_cov_bits},
                             {"rate", r.rate}});
    try {
        MdimMEstimate est = mdim_M_estimate(prof);
        std::printf("# slope upper=%.10g lower=%.10g fit=%.10g\n", est.upper_slope,
                    est.lower_slope, est.fit_slope);
        j["fit_slope"] = est.fit_slope;
    } catch (const std::invalid_argument&) {
        std::printf("# slope fit skipped: eps grid too small\n");
    }
    if (!out.empty()) save_json_file(out, j);
    return 0;
}

int cmd_hausdorff(const std::string& system_path, const std::string& phi_path,
                  std::vector<double> eps, int n_max, double tau, bool avg,
                  bool greedy) {
    LoadedSystem ls = load_system(system_path);
    Potential phi = potential_from_json(load_json_file(phi_path), ls);
    auto rows = mean_hausdorff_profile(ls.sys, phi, eps, n_max,
                                       avg ? MetricKind::Average : MetricKind::Max, tau,
                                       greedy ? CoverMode::Greedy : CoverMode::Exact,
                                       g_budget);
    std::printf("N,eps,dim_per_N,tau\n");
    for (const auto& r : rows)
        std::printf("%d,%.10g,%.10g,%.10g\n", r.N, r.eps, r.dim, r.tau_used);
    return 0;
}

int cmd_widim(const std::string& system_path, const std::string& phi_path,
              std::vector<double> eps, int n_max) {
    LoadedSystem ls = load_system(system_path);
    Potential phi = potential_from_json(load_json_file(phi_path), ls);
    int violations = 0;
    std::printf("N,eps,small,standard,var,chain_ok\n");
    for (int N = 1; N <= n_max; ++N) {
        Matrix dN = bowen_metric(ls.sys, N);
        Potential SN = birkhoff_sum(ls.sys, phi, N);
        for (double e : eps) {
            WidimPair p = widim_upper_pair(dN, SN.values, e);
            double var = variation(SN.values, dN, e);
            bool ok = p.small.value <= p.standard.value + 1e-12 &&
                      p.standard.value <= p.small.value + var + 1e-12;
            if (!ok) ++violations;
            std::printf("%d,%.10g,%.10g,%.10g,%.10g,%d\n", N, e, p.small.value,
                        p.standard.value, var, ok ? 1 : 0);
        }
    }
    return violations == 0 ? 0 : 2;
}

int cmd_rd(const std::string& system_path, const std::string& measure_path, int N,
           std::vector<double> eps) {
    LoadedSystem ls = load_system(system_path);
    ProbMeasure mu = measure_from_json(load_json_file(measure_path), ls);
    RDCurve curve = rate_distortion(ls.sys, mu, N, eps, orbit_codebook(ls.sys, N));
    std::printf("eps,rate,slope,iterations,converged\n");
    for (const auto& r : curve.rows)
        std::printf("%.10g,%.10g,%.10g,%d,%d\n", r.eps, r.rate, r.slope_param,
                    r.iterations, r.converged ? 1 : 0);
    if (curve.rows.size() >= 3) {
        RdimEstimate est = rdim_estimate(curve);
        std::printf("# rdim upper=%.10g lower=%.10g fit=%.10g saturated=%d\n", est.upper,
                    est.lower, est.fit_slope, est.saturated ? 1 : 0);
    }
    return 0;
}

int cmd_frostman(const std::string& system_path, double s, double delta, double grain,
                 const std::string& family, const std::string& out) {
    LoadedSystem ls = load_system(system_path);
    ConstraintFamily fam =
        family == "subsets" ? ConstraintFamily::Subsets : ConstraintFamily::Balls;
    FrostmanResult res = frostman_measure(ls.sys.dist, s, delta, grain, fam);
    double gap = std::abs(res.lp_value - res.dual_cover_value);
    std::printf("lp_value=%.12g dual_cover=%.12g gap=%.3g normalizable=%d\n", res.lp_value,
                res.dual_cover_value, gap, res.normalizable ? 1 : 0);
    if (!out.empty()) {
        json j;
        j["s"] = s;
        j["delta"] = delta;
        j["grain"] = grain;
        j["lp_value"] = res.lp_value;
        j["dual_cover_value"] = res.dual_cover_value;
        j["normalizable"] = res.normalizable;
        for (int i = 0; i < ls.sys.size(); ++i)
            j["measure"][ls.sys.points[i]] = res.measure[i];
        save_json_file(out, j);
    }
    return gap <= 1e-9 ? 0 : 2;
}

int cmd_tiling(const std::string& system_path, const std::string& psi_path, int point,
               int horizon, const std::string& out) {
    LoadedSystem ls = load_system(system_path);
    MarkerFunction psi = psi_from_json(load_json_file(psi_path), ls.sys);
    TilingChart chart = tiling_for(ls.sys, psi, point, horizon);
    std::printf("marker,lo,hi,empty,certified\n");
    for (const auto& iv : chart.intervals)
        std::printf("%d,%s,%s,%d,%d\n", iv.a,
                    iv.has_lo ? std::to_string(iv.lo).c_str() : "-inf",
                    iv.has_hi ? std::to_string(iv.hi).c_str() : "+inf",
                    iv.empty ? 1 : 0, iv.certified ? 1 : 0);
    if (!out.empty()) {
        json j;
        j["base_point"] = point;
        j["horizon"] = horizon;
        for (const auto& iv : chart.intervals) {
            json e = {{"marker", iv.a},
                      {"empty", iv.empty},
                      {"certified", iv.certified}};
            if (iv.has_lo) e["lo"] = iv.lo;
            if (iv.has_hi) e["hi"] = iv.hi;
            j["intervals"].push_back(e);
        }
        j["boundary"] = chart.boundary;
        save_json_file(out, j);
    }
    return 0;
}

int cmd_verify_chain(const std::string& scenario_path) {
    Scenario sc = scenario_from_json(load_json_file(scenario_path));
    ChainReport rep = verify_chain(sc);
    std::printf("check,measure,N,eps,lhs,rhs,defect,pass,note\n");
    for (const auto& r : rep.rows)
        std::printf("%s,%s,%d,%.10g,%.10g,%.10g,%.10g,%d,%s\n", r.check.c_str(),
                    r.measure.c_str(), r.N, r.eps, r.lhs, r.rhs, r.defect, r.pass ? 1 : 0,
                    r.note.c_str());
    std::printf("# %d violation(s)\n", rep.violations());
    return rep.all_pass() ? 0 : 2;
}

int cmd_example_hilbert(int levels, int period, int window, std::vector<int> ks,
                        const std::string& out) {
    if (ks.empty()) ks = {1, 2, 4};
    HilbertReport rep = example_hilbert(levels, period, window, ks);
    std::printf("# m=%d p=%d W=%d omega=%.6g\n", rep.m, rep.p, rep.W, rep.omega);
    std::printf("# pressure eps=%.6g rate=%.6g N=%d ratio=%.6g exact=%d\n",
                rep.pressure_eps, rep.pressure_rate, rep.pressure_N, rep.pressure_ratio,
                rep.pressure_exact ? 1 : 0);
    std::printf("k,integral,integral_target,rdim_fit,rdim_upper,sum\n");
    for (const auto& r : rep.rows)
        std::printf("%d,%.8g,%.8g,%.8g,%.8g,%.8g\n", r.k, r.integral, r.integral_target,
                    r.rdim_fit, r.rdim_upper, r.sum);
    if (!out.empty()) {
        json j;
        j["pressure_ratio"] = rep.pressure_ratio;
        for (const auto& r : rep.rows)
            j["rows"].push_back({{"k", r.k}, {"integral", r.integral},
                                 {"rdim_fit", r.rdim_fit}, {"sum", r.sum}});
        save_json_file(out, j);
    }
    return 0;
}

int cmd_selftest() {
    LemmaSuiteReport rep = info_property_checks(g_seed);
    std::printf("dpi %d/%d\nsubadditivity %d/%d\nconcavity %d/%d\nconvexity %d/%d\n"
                "convergence %d/%d\n",
                rep.dpi_checked - rep.dpi_failures, rep.dpi_checked,
                rep.subadd_checked - rep.subadd_failures, rep.subadd_checked,
                rep.concavity_checked - rep.concavity_failures, rep.concavity_checked,
                rep.convexity_checked - rep.convexity_failures, rep.convexity_checked,
                rep.convergence_checked - rep.convergence_failures, rep.convergence_checked);
    return rep.all_ok() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-scale dimension and rate-distortion toolkit"};
    app.require_subcommand(1);
    app.add_option("--seed", g_seed, "RNG seed for randomized checks");
    app.add_option("--threads", g_threads, "worker threads (currently sequential)");
    app.add_option("--budget", g_budget, "exact-search point budget");

    std::string system_path, phi_path, measure_path, psi_path, scenario_path, out;
    std::string family = "balls";
    std::vector<double> eps;
    std::vector<int> ks;
    int n_max = 3, N = 2, point = 0, horizon = 16;
    int levels = 16, period = 5, window = 12;
    double tau = 0.0, s_exp = 1.0, delta = 1.0, grain = 0.0;
    bool greedy = false, avg = false;

    auto* cover = app.add_subcommand("cover", "covering numbers and pressure rates");
    cover->add_option("--system", system_path)->required();
    cover->add_option("--phi", phi_path)->required();
    cover->add_option("--eps", eps)->required();
    cover->add_option("--N", n_max);
    cover->add_flag("--greedy", greedy);
    cover->add_option("--out", out);

    auto* hd = app.add_subcommand("hausdorff", "scale-wise Hausdorff dimensions");
    hd->add_option("--system", system_path)->required();
    hd->add_option("--phi", phi_path)->required();
    hd->add_option("--eps", eps)->required();
    hd->add_option("--N", n_max);
    hd->add_option("--tau", tau);
    hd->add_flag("--avg", avg);
    hd->add_flag("--greedy", greedy);

    auto* wd = app.add_subcommand("widim", "nerve width-dimension bounds");
    wd->add_option("--system", system_path)->required();
    wd->add_option("--phi", phi_path)->required();
    wd->add_option("--eps", eps)->required();
    wd->add_option("--N", n_max);

    auto* rd = app.add_subcommand("rd", "rate-distortion curve");
    rd->add_option("--system", system_path)->required();
    rd->add_option("--measure", measure_path)->required();
    rd->add_option("--N", N);
    rd->add_option("--eps", eps)->required();

    auto* fr = app.add_subcommand("frostman", "Frostman measure LP");
    fr->add_option("--system", system_path)->required();
    fr->add_option("--s", s_exp)->required();
    fr->add_option("--delta", delta)->required();
    fr->add_option("--grain", grain);
    fr->add_option("--family", family)->check(CLI::IsMember({"balls", "subsets"}));
    fr->add_option("--out", out);

    auto* ti = app.add_subcommand("tiling", "dynamical Voronoi chart");
    ti->add_option("--system", system_path)->required();
    ti->add_option("--psi", psi_path)->required();
    ti->add_option("--point", point);
    ti->add_option("--horizon", horizon);
    ti->add_option("--out", out);

    auto* vc = app.add_subcommand("verify-chain", "inequality-chain report");
    vc->add_option("--scenario", scenario_path)->required();

    auto* eh = app.add_subcommand("example-hilbert", "quantized Hilbert-cube tables");
    eh->add_option("--levels", levels);
    eh->add_option("--period", period);
    eh->add_option("--window", window);
    eh->add_option("--k", ks);
    eh->add_option("--out", out);

    auto* st = app.add_subcommand("selftest", "randomized property checks");
    (void)st;

    CLI11_PARSE(app, argc, argv);

    try {
        if (cover->parsed()) return cmd_cover(system_path, phi_path, eps, n_max, greedy, out);
        if (hd->parsed())
            return cmd_hausdorff(system_path, phi_path, eps, n_max, tau, avg, greedy);
        if (wd->parsed()) return cmd_widim(system_path, phi_path, eps, n_max);
        if (rd->parsed()) return cmd_rd(system_path, measure_path, N, eps);
        if (fr->parsed()) return cmd_frostman(system_path, s_exp, delta, grain, family, out);
        if (ti->parsed()) return cmd_tiling(system_path, psi_path, point, horizon, out);
        if (vc->parsed()) return cmd_verify_chain(scenario_path);
        if (eh->parsed()) return cmd_example_hilbert(levels, period, window, ks, out);
        if (st->parsed()) return cmd_selftest();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
