#include "meandim/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace meandim {

void FiniteSystem::validate(double tol) const {
    const int n = size();
    if (dist.size() != n || static_cast<int>(time_map.size()) != n)
        throw std::invalid_argument("FiniteSystem: inconsistent sizes");
    std::vector<int> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        if (time_map[i] < 0 || time_map[i] >= n)
            throw std::invalid_argument("FiniteSystem: time_map out of range");
        seen[time_map[i]]++;
    }
    for (int i = 0; i < n; ++i)
        if (seen[i] != 1) throw std::invalid_argument("FiniteSystem: time_map not a bijection");
    for (int i = 0; i < n; ++i) {
        if (std::abs(dist.at(i, i)) > tol)
            throw std::invalid_argument("FiniteSystem: nonzero diagonal");
        for (int j = 0; j < n; ++j) {
            if (dist.at(i, j) < -tol)
                throw std::invalid_argument("FiniteSystem: negative distance");
            if (std::abs(dist.at(i, j) - dist.at(j, i)) > tol)
                throw std::invalid_argument("FiniteSystem: asymmetric metric");
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (dist.at(i, j) > dist.at(i, k) + dist.at(k, j) + tol)
                    throw std::invalid_argument("FiniteSystem: triangle inequality fails");
}

int FiniteSystem::forward(int i, int steps) const {
    for (int s = 0; s < steps; ++s) i = time_map[i];
    return i;
}

int FiniteSystem::backward(int i, int steps) const {
    const int n = size();
    std::vector<int> inv(n);
    for (int k = 0; k < n; ++k) inv[time_map[k]] = k;
    for (int s = 0; s < steps; ++s) i = inv[i];
    return i;
}

double FiniteSystem::min_positive_distance() const {
    double m = 0.0;
    const int n = size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double d = dist.at(i, j);
            if (d > 0.0 && (m == 0.0 || d < m)) m = d;
        }
    return m;
}

std::vector<double> uniform_grid(int levels) {
    if (levels < 1) throw std::invalid_argument("uniform_grid: levels < 1");
    if (levels == 1) return {0.0};
    std::vector<double> g(levels);
    for (int j = 0; j < levels; ++j) g[j] = static_cast<double>(j) / (levels - 1);
    return g;
}

double Potential::max() const {
    double m = values.empty() ? 0.0 : values[0];
    for (double v : values) m = std::max(m, v);
    return m;
}

double Potential::sup_norm() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

Matrix bowen_metric(const FiniteSystem& sys, int N) {
    if (N < 1) throw std::invalid_argument("bowen_metric: N < 1");
    const int n = sys.size();
    Matrix d(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double m = 0.0;
            int a = i, b = j;
            for (int t = 0; t < N; ++t) {
                m = std::max(m, sys.dist.at(a, b));
                a = sys.time_map[a];
                b = sys.time_map[b];
            }
            d.at(i, j) = m;
        }
    return d;
}

Matrix average_metric(const FiniteSystem& sys, int N) {
    if (N < 1) throw std::invalid_argument("average_metric: N < 1");
    const int n = sys.size();
    Matrix d(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            int a = i, b = j;
            for (int t = 0; t < N; ++t) {
                s += sys.dist.at(a, b);
                a = sys.time_map[a];
                b = sys.time_map[b];
            }
            d.at(i, j) = s / N;
        }
    return d;
}

Potential birkhoff_sum(const FiniteSystem& sys, const Potential& phi, int N) {
    if (N < 1) throw std::invalid_argument("birkhoff_sum: N < 1");
    const int n = sys.size();
    Potential out;
    out.values.resize(n);
    out.label = phi.label.empty() ? "" : ("S_N " + phi.label);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        int a = i;
        for (int t = 0; t < N; ++t) {
            s += phi.values[a];
            a = sys.time_map[a];
        }
        out.values[i] = s;
    }
    return out;
}

std::vector<int> symbolic_digits(const SymbolicModel& model, int idx) {
    const int m = static_cast<int>(model.alphabet_values.size());
    std::vector<int> digits(model.period);
    for (int s = 0; s < model.period; ++s) {
        digits[s] = idx % m;
        idx /= m;
    }
    return digits;
}

FiniteSystem build_symbolic(const SymbolicModel& model, int point_budget) {
    const int m = static_cast<int>(model.alphabet_values.size());
    if (m < 1 || model.period < 1 || model.window < 1)
        throw std::invalid_argument("build_symbolic: bad model parameters");
    for (double v : model.alphabet_values)
        if (v < 0.0 || v > 1.0)
            throw std::invalid_argument("build_symbolic: alphabet value outside [0,1]");
    double count = std::pow(static_cast<double>(m), model.period);
    if (count > point_budget)
        throw std::invalid_argument("build_symbolic: point budget exceeded");
    const int n = static_cast<int>(std::llround(count));
    const int p = model.period;

    FiniteSystem sys;
    sys.label = "symbolic(m=" + std::to_string(m) + ",p=" + std::to_string(p) + ")";
    sys.points.resize(n);
    sys.time_map.resize(n);
    std::vector<std::vector<int>> digits(n);
    for (int i = 0; i < n; ++i) {
        digits[i] = symbolic_digits(model, i);
        std::string id;
        for (int s = 0; s < p; ++s) id += std::to_string(digits[i][s]) + (s + 1 < p ? "." : "");
        sys.points[i] = id;
        // cyclic shift: coordinate s of Tx is coordinate s+1 of x
        int shifted = 0, pw = 1;
        for (int s = 0; s < p; ++s) {
            shifted += digits[i][(s + 1) % p] * pw;
            pw *= m;
        }
        sys.time_map[i] = shifted;
    }

    // per-residue weight of the truncated sum: sum of 2^{-|n|} over n = s (mod p)
    std::vector<double> w(p, 0.0);
    for (int nn = -model.window; nn <= model.window; ++nn) {
        int r = ((nn % p) + p) % p;
        w[r] += std::ldexp(1.0, -std::abs(nn));
    }

    sys.dist = Matrix(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double d = 0.0;
            for (int s = 0; s < p; ++s)
                d += w[s] * std::abs(model.alphabet_values[digits[i][s]] -
                                     model.alphabet_values[digits[j][s]]);
            sys.dist.at(i, j) = sys.dist.at(j, i) = d;
        }
    return sys;
}

long long orbit_lcm(const FiniteSystem& sys) {
    const int n = sys.size();
    std::vector<char> done(n, 0);
    long long l = 1;
    for (int i = 0; i < n; ++i) {
        if (done[i]) continue;
        int len = 0, j = i;
        do {
            done[j] = 1;
            j = sys.time_map[j];
            ++len;
        } while (j != i);
        l = std::lcm(l, static_cast<long long>(len));
    }
    return l;
}

}  // namespace meandim
