#include "meandim/chain.hpp"

#include <algorithm>
#include <cmath>

#include "meandim/covering.hpp"
#include "meandim/hausdorff.hpp"
#include "meandim/measures.hpp"
#include "meandim/nerve.hpp"

namespace meandim {

bool ChainReport::all_pass() const {
    for (const auto& r : rows)
        if (!r.pass) return false;
    return true;
}

int ChainReport::violations() const {
    int v = 0;
    for (const auto& r : rows)
        if (!r.pass) ++v;
    return v;
}

PressureDefectCell verify_pressure_defect(const FiniteSystem& sys, const Potential& phi, ProbMeasure mu,
                         double eps, int N, int exact_budget, const BAOptions& opts) {
    check_normalized(mu, 1e-9);
    ProbMeasure pushed = pushforward(sys, mu);
    double drift = 0.0;
    for (size_t i = 0; i < mu.size(); ++i) drift = std::max(drift, std::abs(pushed[i] - mu[i]));
    if (drift > 1e-12) mu = empirical_average(sys, mu, orbit_lcm(sys));

    PressureDefectCell cell;
    cell.eps = eps;
    cell.N = N;
    RDCurve curve = rate_distortion(sys, mu, N, {eps}, orbit_codebook(sys, N), opts);
    cell.rate = curve.rows[0].rate;
    cell.converged = curve.rows[0].converged;
    cell.integral = integrate(phi, mu);
    cell.lhs = cell.rate + std::log2(1.0 / eps) * cell.integral;

    Matrix dN = bowen_metric(sys, N);
    Potential SN = birkhoff_sum(sys, phi, N);
    CoverMode mode = sys.size() <= exact_budget ? CoverMode::Exact : CoverMode::Greedy;
    CoveringResult cov = covering_number(dN, SN.values, eps, mode, exact_budget);
    cell.rhs = std::log2(cov.value) / N;
    cell.defect = cell.rhs - cell.lhs;
    return cell;
}

ChainReport verify_chain(const Scenario& sc) {
    ChainReport rep;
    const FiniteSystem& sys = sc.system.sys;
    const bool exact = sys.size() <= sc.exact_budget;
    const CoverMode mode = exact ? CoverMode::Exact : CoverMode::Greedy;

    for (int N = 1; N <= sc.N_max; ++N) {
        Matrix dN = bowen_metric(sys, N);
        Potential SN = birkhoff_sum(sys, sc.phi, N);
        for (double eps : sc.eps_grid) {
            CoveringResult cov = covering_number(dN, SN.values, eps, mode, sc.exact_budget);
            double cov_bits = std::log2(cov.value);

            // scale-wise Hausdorff dimension vs covering bits (grain 0);
            // only meaningful in exact mode with eps < 1
            if (exact && eps < 1.0) {
                ChainRow row;
                row.check = "hausdorff_vs_cover";
                row.N = N;
                row.eps = eps;
                try {
                    row.lhs = dim_at_scale(dN, SN.values, eps, 0.0, CoverMode::Exact,
                                           sc.exact_budget);
                    row.rhs = cov_bits / std::log2(1.0 / eps);
                    row.defect = row.rhs - row.lhs;
                    row.pass = row.defect >= -1e-9;
                } catch (const std::runtime_error& e) {
                    row.note = std::string("skipped: ") + e.what();
                }
                rep.rows.push_back(row);
            }

            {
                ChainRow row;
                row.check = "widim_chain";
                row.N = N;
                row.eps = eps;
                WidimPair p = widim_upper_pair(dN, SN.values, eps);
                double var = variation(SN.values, dN, eps);
                bool lower_ok = p.small.value <= p.standard.value + 1e-12;
                bool upper_ok = p.standard.value <= p.small.value + var + 1e-12;
                row.lhs = p.small.value;
                row.rhs = p.standard.value;
                row.defect = p.small.value + var - p.standard.value;
                row.pass = lower_ok && upper_ok;
                rep.rows.push_back(row);
            }

            for (size_t mi = 0; mi < sc.measures.size(); ++mi) {
                ChainRow row;
                row.check = "pressure_defect";
                row.measure = sc.measure_labels[mi];
                row.N = N;
                row.eps = eps;
                PressureDefectCell cell =
                    verify_pressure_defect(sys, sc.phi, sc.measures[mi], eps, N, sc.exact_budget);
                row.lhs = cell.lhs;
                row.rhs = cell.rhs;
                row.defect = cell.defect;
                row.pass = cell.defect >= -1e-2;
                if (!cell.converged) row.note = "ba_not_converged";
                rep.rows.push_back(row);
            }
        }
    }
    return rep;
}

}  // namespace meandim
