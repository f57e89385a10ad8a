#ifndef MEANDIM_CORE_HPP
#define MEANDIM_CORE_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace meandim {

// Dense symmetric n x n matrix of doubles, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n, double fill = 0.0) : n_(n), a_(static_cast<size_t>(n) * n, fill) {}

    int size() const { return n_; }
    double& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    double at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    double max_entry() const {
        double m = 0.0;
        for (double v : a_) m = std::max(m, v);
        return m;
    }

private:
    int n_ = 0;
    std::vector<double> a_;
};

inline double log2_safe(double x) { return std::log2(x); }

// pow with the 0^0 = 1 convention used for Hausdorff contents.
inline double pow_conv(double base, double expo) {
    if (base == 0.0) {
        if (expo == 0.0) return 1.0;
        if (expo > 0.0) return 0.0;
        throw std::domain_error("pow_conv: 0 raised to negative exponent");
    }
    return std::pow(base, expo);
}

}  // namespace meandim

#endif
