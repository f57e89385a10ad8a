#include "meandim/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace meandim {

namespace {

Rat make_rat(__int128 n, __int128 d) {
    if (d == 0) throw std::invalid_argument("Rat: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a) {
        n /= a;
        d /= a;
    }
    const __int128 lim = std::numeric_limits<long long>::max();
    if (n > lim || n < -lim || d > lim)
        throw std::overflow_error("Rat: overflow");
    Rat r;
    r.num = static_cast<long long>(n);
    r.den = static_cast<long long>(d);
    return r;
}

}  // namespace

Rat::Rat(long long n, long long d) { *this = make_rat(n, d); }

Rat Rat::operator+(const Rat& o) const {
    return make_rat(static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den,
                    static_cast<__int128>(den) * o.den);
}
Rat Rat::operator-(const Rat& o) const { return *this + (-o); }
Rat Rat::operator*(const Rat& o) const {
    return make_rat(static_cast<__int128>(num) * o.num, static_cast<__int128>(den) * o.den);
}
Rat Rat::operator/(const Rat& o) const {
    if (o.num == 0) throw std::invalid_argument("Rat: division by zero");
    return make_rat(static_cast<__int128>(num) * o.den, static_cast<__int128>(den) * o.num);
}
bool Rat::operator<(const Rat& o) const {
    return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
}

void MarkerFunction::validate(const FiniteSystem& sys) const {
    if (static_cast<int>(values.size()) != sys.size())
        throw std::invalid_argument("MarkerFunction: size mismatch");
    for (const Rat& v : values)
        if (v < Rat(0) || Rat(1) < v)
            throw std::invalid_argument("MarkerFunction: value outside [0,1]");
    std::vector<char> seen(sys.size(), 0);
    for (int i = 0; i < sys.size(); ++i) {
        if (seen[i]) continue;
        bool positive = false;
        int j = i;
        do {
            seen[j] = 1;
            if (Rat(0) < values[j]) positive = true;
            j = sys.time_map[j];
        } while (j != i);
        if (!positive)
            throw std::invalid_argument("MarkerFunction: orbit without positive value");
    }
}

MarkerFunction stride_marker(const FiniteSystem& sys, int stride) {
    if (stride < 1) throw std::invalid_argument("stride_marker: stride < 1");
    MarkerFunction psi;
    psi.values.assign(sys.size(), Rat(0));
    std::vector<char> seen(sys.size(), 0);
    for (int i = 0; i < sys.size(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        do {
            ++len;
            j = sys.time_map[j];
        } while (j != i);
        if (len % stride != 0)
            throw std::invalid_argument("stride_marker: orbit length not divisible");
        j = i;
        for (int pos = 0; pos < len; ++pos) {
            seen[j] = 1;
            if (pos % stride == 0) psi.values[j] = Rat(1);
            j = sys.time_map[j];
        }
    }
    return psi;
}

double bisector_abscissa(double a, double h_a, double b, double h_b) {
    if (a == b) throw std::invalid_argument("bisector_abscissa: degenerate markers");
    return (b * b - a * a + h_b * h_b - h_a * h_a) / (2.0 * (b - a));
}

Rat bisector_abscissa_exact(long long a, const Rat& h_a, long long b, const Rat& h_b) {
    if (a == b) throw std::invalid_argument("bisector_abscissa: degenerate markers");
    Rat ra(a), rb(b);
    return (rb * rb - ra * ra + h_b * h_b - h_a * h_a) / (Rat(2) * (rb - ra));
}

namespace {

template <class S>
S bis(int a, const S& h_a, int b, const S& h_b) {
    S ra(a), rb(b);
    return (rb * rb - ra * ra + h_b * h_b - h_a * h_a) / (S(2) * (rb - ra));
}

// owner (a, h) still wins axis point t against any marker at position b
// beyond the horizon (height >= 1): (t-a)^2 + h^2 <= (t-b)^2 + 1
template <class S>
bool beats_outside(const S& t, int a, const S& h, int b) {
    S sa(a), sb(b);
    return (t - sa) * (t - sa) + h * h <= (t - sb) * (t - sb) + S(1);
}

template <class S>
ChartT<S> build_chart(const FiniteSystem& sys, const MarkerFunction& psi, int x,
                      int horizon,
                      S (*height_of)(const Rat&)) {
    if (horizon < 0) throw std::invalid_argument("tiling: negative horizon");
    psi.validate(sys);
    ChartT<S> chart;
    chart.base_point = x;
    chart.horizon = horizon;
    for (int a = -horizon; a <= horizon; ++a) {
        int idx = a >= 0 ? sys.forward(x, a) : sys.backward(x, -a);
        const Rat& v = psi.values[idx];
        if (v.num > 0) chart.markers.push_back({a, height_of(v)});
    }
    if (chart.markers.empty())
        throw std::runtime_error("tiling: no marker in horizon");
    const int k = static_cast<int>(chart.markers.size());
    for (int i = 0; i < k; ++i) {
        IntervalT<S> iv;
        iv.a = chart.markers[i].first;
        for (int j = 0; j < k; ++j) {
            if (j == i) continue;
            S t = bis(chart.markers[j].first, chart.markers[j].second,
                      chart.markers[i].first, chart.markers[i].second);
            if (chart.markers[j].first < chart.markers[i].first) {
                if (!iv.has_lo || iv.lo < t) {
                    iv.lo = t;
                    iv.has_lo = true;
                }
            } else {
                // bis(j, i) with j to the right: same axis point, owner side flips
                if (!iv.has_hi || t < iv.hi) {
                    iv.hi = t;
                    iv.has_hi = true;
                }
            }
        }
        iv.empty = iv.has_lo && iv.has_hi && iv.hi < iv.lo;
        if (iv.empty) {
            iv.certified = true;  // more competition never revives a cell
        } else if (iv.has_lo && iv.has_hi) {
            const S& h = chart.markers[i].second;
            iv.certified = true;
            for (const S& t : {iv.lo, iv.hi})
                for (int b : {horizon + 1, -(horizon + 1)})
                    if (!beats_outside(t, iv.a, h, b)) iv.certified = false;
        }
        chart.intervals.push_back(std::move(iv));
    }
    for (const auto& iv : chart.intervals) {
        if (!iv.certified || iv.empty) continue;
        chart.boundary.push_back(iv.lo);
        chart.boundary.push_back(iv.hi);
    }
    std::sort(chart.boundary.begin(), chart.boundary.end());
    chart.boundary.erase(std::unique(chart.boundary.begin(), chart.boundary.end()),
                         chart.boundary.end());
    return chart;
}

double as_double(double v) { return v; }
double as_double(const Rat& v) { return v.to_double(); }

template <class S>
std::vector<std::pair<S, S>> covered_segments(const ChartT<S>& chart) {
    std::vector<std::pair<S, S>> segs;
    for (const auto& iv : chart.intervals)
        if (iv.certified && !iv.empty) segs.push_back({iv.lo, iv.hi});
    std::sort(segs.begin(), segs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<S, S>> merged;
    for (const auto& s : segs) {
        if (!merged.empty() && !(merged.back().second < s.first)) {
            if (merged.back().second < s.second) merged.back().second = s.second;
        } else {
            merged.push_back(s);
        }
    }
    return merged;
}

}  // namespace

TilingChart tiling_for(const FiniteSystem& sys, const MarkerFunction& psi, int x,
                       int horizon) {
    return build_chart<double>(sys, psi, x, horizon,
                               [](const Rat& v) { return 1.0 / v.to_double(); });
}

ExactChart tiling_for_exact(const FiniteSystem& sys, const MarkerFunction& psi, int x,
                            int horizon) {
    return build_chart<Rat>(sys, psi, x, horizon,
                            [](const Rat& v) { return Rat(v.den, v.num); });
}

EquivarianceReport equivariance_check(const FiniteSystem& sys, const MarkerFunction& psi,
                                      int x, int n, int horizon) {
    if (n < 0) throw std::invalid_argument("equivariance_check: n < 0");
    ExactChart cx = tiling_for_exact(sys, psi, x, horizon);
    ExactChart cy = tiling_for_exact(sys, psi, sys.forward(x, n), horizon);

    auto segx = covered_segments(cx);
    for (auto& s : segx) {  // shift by -n into the frame of T^n x
        s.first = s.first - Rat(n);
        s.second = s.second - Rat(n);
    }
    auto segy = covered_segments(cy);
    std::vector<std::pair<Rat, Rat>> common;
    for (const auto& a : segx)
        for (const auto& b : segy) {
            Rat lo = a.first < b.first ? b.first : a.first;
            Rat hi = a.second < b.second ? a.second : b.second;
            if (lo <= hi) common.push_back({lo, hi});
        }
    EquivarianceReport rep;
    rep.certified = !common.empty();
    if (!rep.certified) return rep;

    auto in_common = [&](const Rat& t) {
        for (const auto& s : common)
            if (s.first <= t && t <= s.second) return true;
        return false;
    };
    std::vector<Rat> b1, b2;
    for (const Rat& b : cx.boundary) {
        Rat t = b - Rat(n);
        if (in_common(t)) b1.push_back(t);
    }
    for (const Rat& b : cy.boundary)
        if (in_common(b)) b2.push_back(b);

    rep.exact_equal = (b1 == b2);
    if (rep.exact_equal) {
        rep.max_mismatch = 0.0;
        rep.ok = true;
        return rep;
    }
    auto hausdorff = [](const std::vector<Rat>& u, const std::vector<Rat>& v) {
        double worst = 0.0;
        for (const Rat& a : u) {
            double best = std::numeric_limits<double>::infinity();
            for (const Rat& b : v)
                best = std::min(best, std::abs(a.to_double() - b.to_double()));
            worst = std::max(worst, best);
        }
        return worst;
    };
    rep.max_mismatch = std::max(hausdorff(b1, b2), hausdorff(b2, b1));
    rep.ok = rep.max_mismatch <= 1e-9;
    return rep;
}

std::vector<std::pair<double, double>> boundary_density(const FiniteSystem& sys,
                                                        const MarkerFunction& psi,
                                                        const std::vector<double>& R_list) {
    double max_r = 0.0;
    for (double r : R_list) {
        if (r <= 0.0) throw std::invalid_argument("boundary_density: R <= 0");
        max_r = std::max(max_r, r);
    }
    int horizon = static_cast<int>(std::ceil(max_r)) + 8;
    std::vector<std::pair<double, double>> out;
    std::vector<TilingChart> charts;
    for (int x = 0; x < sys.size(); ++x)
        charts.push_back(tiling_for(sys, psi, x, horizon));
    for (double r : R_list) {
        double sup = 0.0;
        for (const auto& chart : charts) {
            // certified coverage of [0, r] required
            auto segs = covered_segments(chart);
            bool covered = false;
            for (const auto& s : segs)
                if (s.first <= 0.0 && r <= s.second) covered = true;
            if (!covered)
                throw std::runtime_error("boundary_density: window not certified");
            int count = 0;
            for (double b : chart.boundary)
                if (0.0 <= b && b <= r) ++count;
            sup = std::max(sup, count / r);
        }
        out.push_back({r, sup});
    }
    return out;
}

}  // namespace meandim
