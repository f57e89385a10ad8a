#ifndef MEANDIM_CHAIN_HPP
#define MEANDIM_CHAIN_HPP

#include <string>
#include <vector>

#include "meandim/config.hpp"
#include "meandim/info.hpp"
#include "meandim/spaces.hpp"

namespace meandim {

struct PressureDefectCell {
    double eps = 0.0;
    int N = 0;
    double rate = 0.0;      // BA upper bound on R(d, mu, eps), bits per iterate
    double integral = 0.0;  // int phi dmu
    double lhs = 0.0;       // rate + log2(1/eps) * integral
    double rhs = 0.0;       // log2 #(X, d_N, S_N phi, eps) / N
    double defect = 0.0;    // rhs - lhs, required >= -1e-2
    bool converged = false;
};

// mu is averaged to invariance first when needed.
PressureDefectCell verify_pressure_defect(const FiniteSystem& sys, const Potential& phi, ProbMeasure mu,
                         double eps, int N, int exact_budget = 20,
                         const BAOptions& opts = {});

struct ChainRow {
    std::string check;
    std::string measure;  // empty for measure-free checks
    int N = 0;
    double eps = 0.0;
    double lhs = 0.0, rhs = 0.0, defect = 0.0;
    bool pass = true;
    std::string note;
};

struct ChainReport {
    std::vector<ChainRow> rows;
    bool all_pass() const;
    int violations() const;
};

// Per-(N, eps) one-sided checks of the inequality chain at finite scale:
// scale-wise Hausdorff dimension vs covering bits, the small/standard nerve
// chain, and the pressure defect per measure.
ChainReport verify_chain(const Scenario& sc);

}  // namespace meandim

#endif
