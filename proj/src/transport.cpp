#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "meandim/measures.hpp"

namespace meandim {

namespace {

struct BasicCell {
    int i, j;
    double flow;
};

// Path of basic cells linking row `i0` to column `j0` through the basis
// tree (rows and columns as bipartite nodes, basic cells as edges).
std::vector<int> tree_path(const std::vector<BasicCell>& basis, int n, int m, int i0,
                           int j0) {
    // node ids: rows 0..n-1, cols n..n+m-1
    std::vector<std::vector<std::pair<int, int>>> adj(n + m);  // (neighbor, cell idx)
    for (size_t k = 0; k < basis.size(); ++k) {
        adj[basis[k].i].push_back({n + basis[k].j, static_cast<int>(k)});
        adj[n + basis[k].j].push_back({basis[k].i, static_cast<int>(k)});
    }
    std::vector<int> prev_node(n + m, -1), prev_cell(n + m, -1);
    std::vector<char> seen(n + m, 0);
    std::queue<int> q;
    q.push(i0);
    seen[i0] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (u == n + j0) break;
        for (auto [v, ci] : adj[u]) {
            if (seen[v]) continue;
            seen[v] = 1;
            prev_node[v] = u;
            prev_cell[v] = ci;
            q.push(v);
        }
    }
    if (!seen[n + j0]) throw std::logic_error("optimal_coupling: basis not spanning");
    std::vector<int> path;
    for (int u = n + j0; u != i0; u = prev_node[u]) path.push_back(prev_cell[u]);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

TransportPlan optimal_coupling(const ProbMeasure& p, const ProbMeasure& q,
                               const Matrix& cost) {
    const int n = static_cast<int>(p.size()), m = static_cast<int>(q.size());
    check_normalized(p, 1e-9);
    check_normalized(q, 1e-9);
    if (cost.size() != n || n != m)
        // the Matrix type is square; rectangular costs come in padded
        throw std::invalid_argument("optimal_coupling: cost size mismatch");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            if (cost.at(i, j) < 0.0)
                throw std::invalid_argument("optimal_coupling: negative cost");

    // northwest-corner start: exactly n + m - 1 basic cells, zeros allowed
    std::vector<BasicCell> basis;
    {
        std::vector<double> a = p, b = q;
        int i = 0, j = 0;
        while (static_cast<int>(basis.size()) < n + m - 1) {
            double f = std::min(a[i], b[j]);
            basis.push_back({i, j, f});
            a[i] -= f;
            b[j] -= f;
            if (i < n - 1 && (a[i] <= b[j] || j == m - 1))
                ++i;
            else
                ++j;
        }
    }

    const double tol = 1e-12;
    const int iter_cap = 200 * (n + m) * (n + m) + 1000;
    for (int iter = 0;; ++iter) {
        if (iter > iter_cap) throw std::runtime_error("optimal_coupling: iteration cap");
        // potentials u_i + v_j = c_ij on the basis tree
        std::vector<double> u(n, 0.0), v(m, 0.0);
        std::vector<char> ku(n, 0), kv(m, 0);
        ku[0] = 1;
        for (int pass = 0; pass < n + m; ++pass) {
            bool moved = false;
            for (const auto& c : basis) {
                if (ku[c.i] && !kv[c.j]) {
                    v[c.j] = cost.at(c.i, c.j) - u[c.i];
                    kv[c.j] = 1;
                    moved = true;
                } else if (!ku[c.i] && kv[c.j]) {
                    u[c.i] = cost.at(c.i, c.j) - v[c.j];
                    ku[c.i] = 1;
                    moved = true;
                }
            }
            if (!moved) break;
        }
        // most negative reduced cost
        int bi = -1, bj = -1;
        double best = -tol;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) {
                double r = cost.at(i, j) - u[i] - v[j];
                if (r < best) {
                    best = r;
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0) break;  // optimal
        std::vector<int> path = tree_path(basis, n, m, bi, bj);
        // entering cell +theta; path cells alternate -,+,- starting with -
        double theta = std::numeric_limits<double>::infinity();
        int leave = -1;
        for (size_t k = 0; k < path.size(); k += 2)
            if (basis[path[k]].flow < theta) {
                theta = basis[path[k]].flow;
                leave = path[k];
            }
        for (size_t k = 0; k < path.size(); ++k)
            basis[path[k]].flow += (k % 2 == 0) ? -theta : theta;
        basis[leave] = {bi, bj, theta};
    }

    TransportPlan plan;
    plan.pi.assign(n, std::vector<double>(m, 0.0));
    for (const auto& c : basis) plan.pi[c.i][c.j] += c.flow;
    plan.cost = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) plan.cost += plan.pi[i][j] * cost.at(i, j);
    return plan;
}

}  // namespace meandim
