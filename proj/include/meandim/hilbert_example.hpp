#ifndef MEANDIM_HILBERT_EXAMPLE_HPP
#define MEANDIM_HILBERT_EXAMPLE_HPP

#include <vector>

#include "meandim/info.hpp"

namespace meandim {

struct HilbertMeasureRow {
    int k = 1;
    double integral = 0.0;         // int phi dmu_k on the quantized model
    double integral_target = 0.0;  // 1 - 1/(2k)
    double rdim_fit = 0.0;
    double rdim_upper = 0.0;
    bool rdim_saturated = false;
    double sum = 0.0;  // rdim_fit + integral
    RDCurve curve;
};

struct HilbertReport {
    int m = 0, p = 0, W = 0;
    double omega = 0.0;  // total weight of the truncated sum metric
    std::vector<double> rd_eps_grid;
    std::vector<HilbertMeasureRow> rows;
    double pressure_eps = 0.0;
    double pressure_rate = 0.0;   // min over N <= p of the singleton-cover rate
    int pressure_N = 0;
    double pressure_ratio = 0.0;  // pressure_rate / log2(1/eps)
    bool pressure_exact = false;  // all pairs eps-separated under d_p, so the
                                  // N = p singleton value is the true minimum
};

// Quantized full shift on m levels with period p and window W, phi(x) = x_0,
// measures mu_k = product of the quantized uniform law on [1 - 1/k, 1].
// Product structure is exploited throughout: the integral and the pressure
// have closed forms, and the separable metric reduces rate-distortion to a
// scalar source, so the m^p points are never enumerated.
HilbertReport example_hilbert(int m, int p, int W, const std::vector<int>& ks,
                              std::vector<double> rd_eps_grid = {},
                              double pressure_eps = 0.0);

}  // namespace meandim

#endif
