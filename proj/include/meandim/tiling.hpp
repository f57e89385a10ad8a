#ifndef MEANDIM_TILING_HPP
#define MEANDIM_TILING_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "meandim/spaces.hpp"

namespace meandim {

// Small exact rational on long long, enough for bisector arithmetic at
// desk-scale horizons. Throws on overflow of the reduced form.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d);

    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    Rat operator/(const Rat& o) const;
    Rat operator-() const { return {-num, den}; }
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const;
    bool operator<=(const Rat& o) const { return *this < o || *this == o; }
    bool operator>(const Rat& o) const { return o < *this; }
    bool operator>=(const Rat& o) const { return o <= *this; }

    double to_double() const { return static_cast<double>(num) / den; }
};

// psi: X -> [0,1], stored exactly; every orbit must contain psi > 0.
struct MarkerFunction {
    std::vector<Rat> values;
    double at(int i) const { return values[i].to_double(); }
    void validate(const FiniteSystem& sys) const;
};

// psi = 1 every `stride` positions along each orbit, 0 elsewhere; orbit
// lengths must be divisible by the stride.
MarkerFunction stride_marker(const FiniteSystem& sys, int stride);

// Unique axis point equidistant from markers (a, h_a) and (b, h_b).
double bisector_abscissa(double a, double h_a, double b, double h_b);
Rat bisector_abscissa_exact(long long a, const Rat& h_a, long long b, const Rat& h_b);

template <class S>
struct IntervalT {
    int a = 0;        // owning marker position
    S lo{}, hi{};     // endpoints, meaningful when has_lo / has_hi
    bool has_lo = false, has_hi = false;
    bool empty = false;
    bool certified = false;  // immune to markers beyond the horizon
};

template <class S>
struct ChartT {
    int base_point = 0;
    int horizon = 0;
    std::vector<std::pair<int, S>> markers;  // (position, height 1/psi)
    std::vector<IntervalT<S>> intervals;
    std::vector<S> boundary;  // endpoints of certified intervals, sorted
};

using TilingChart = ChartT<double>;
using ExactChart = ChartT<Rat>;

TilingChart tiling_for(const FiniteSystem& sys, const MarkerFunction& psi, int x,
                       int horizon);
ExactChart tiling_for_exact(const FiniteSystem& sys, const MarkerFunction& psi, int x,
                            int horizon);

struct EquivarianceReport {
    bool certified = false;   // both charts cover the compared window
    double max_mismatch = 0;  // Hausdorff distance of shifted boundary sets
    bool exact_equal = false;
    bool ok = false;
};

// boundary(T^n x) vs -n + boundary(x) on the common certified window,
// exact rational arithmetic.
EquivarianceReport equivariance_check(const FiniteSystem& sys, const MarkerFunction& psi,
                                      int x, int n, int horizon);

// sup over base points of |boundary(x) in [0,R]| / R, per R.
std::vector<std::pair<double, double>> boundary_density(const FiniteSystem& sys,
                                                        const MarkerFunction& psi,
                                                        const std::vector<double>& R_list);

}  // namespace meandim

#endif
