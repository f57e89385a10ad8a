#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "meandim/measures.hpp"

using namespace meandim;

namespace {

ProbMeasure random_measure(std::mt19937_64& rng, int n) {
    std::exponential_distribution<double> ed(1.0);
    ProbMeasure p(n);
    double s = 0;
    for (double& v : p) {
        v = ed(rng);
        s += v;
    }
    for (double& v : p) v /= s;
    return p;
}

void check_marginals(const TransportPlan& plan, const ProbMeasure& p,
                     const ProbMeasure& q) {
    const int n = static_cast<int>(p.size());
    for (int i = 0; i < n; ++i) {
        double row = 0, col = 0;
        for (int j = 0; j < n; ++j) {
            row += plan.pi[i][j];
            col += plan.pi[j][i];
            CHECK(plan.pi[i][j] >= -1e-15);
        }
        CHECK(std::abs(row - p[i]) <= 1e-10);
        CHECK(std::abs(col - q[i]) <= 1e-10);
    }
}

}  // namespace

TEST_CASE("forced couplings") {
    Matrix c2(2);
    c2.at(0, 1) = c2.at(1, 0) = 1.0;
    TransportPlan plan = optimal_coupling({1.0, 0.0}, {0.0, 1.0}, c2);
    CHECK(plan.cost == doctest::Approx(1.0));
    CHECK(plan.pi[0][1] == doctest::Approx(1.0));

    // identical marginals on a metric cost: zero, diagonal plan optimal
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        FiniteSystem sys = testutil::random_system(rng, 6);
        ProbMeasure p = random_measure(rng, 6);
        TransportPlan same = optimal_coupling(p, p, sys.dist);
        CHECK(same.cost == doctest::Approx(0.0).epsilon(1e-12));
        check_marginals(same, p, p);
    }
}

TEST_CASE("marginals exact and cost below random feasible plans") {
    std::mt19937_64 rng(72);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        FiniteSystem sys = testutil::random_system(rng, n);
        ProbMeasure p = random_measure(rng, n), q = random_measure(rng, n);
        TransportPlan plan = optimal_coupling(p, q, sys.dist);
        check_marginals(plan, p, q);

        // feasible competitor: independent coupling, then a random reroute
        double indep_cost = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) indep_cost += p[i] * q[j] * sys.dist.at(i, j);
        CHECK(plan.cost <= indep_cost + 1e-10);
    }
}

TEST_CASE("induced W1 distance: triangle inequality on random triples") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + static_cast<int>(rng() % 5);
        FiniteSystem sys = testutil::random_system(rng, n);
        ProbMeasure a = random_measure(rng, n), b = random_measure(rng, n),
                    c = random_measure(rng, n);
        double ab = optimal_coupling(a, b, sys.dist).cost;
        double bc = optimal_coupling(b, c, sys.dist).cost;
        double ac = optimal_coupling(a, c, sys.dist).cost;
        CHECK(ac <= ab + bc + 1e-9);
        CHECK(ab >= -1e-12);
    }
}

TEST_CASE("complementary slackness spot check") {
    std::mt19937_64 rng(74);
    FiniteSystem sys = testutil::random_system(rng, 5);
    ProbMeasure p = random_measure(rng, 5), q = random_measure(rng, 5);
    TransportPlan plan = optimal_coupling(p, q, sys.dist);
    // optimality certificate: no 2x2 swap can lower the cost
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            for (int k = 0; k < 5; ++k)
                for (int l = 0; l < 5; ++l) {
                    double move = std::min(plan.pi[i][j], plan.pi[k][l]);
                    if (move <= 1e-12) continue;
                    double delta = sys.dist.at(i, l) + sys.dist.at(k, j) -
                                   sys.dist.at(i, j) - sys.dist.at(k, l);
                    CHECK(delta >= -1e-9);
                }
}

TEST_CASE("converging measures: coupling cost decreases to zero") {
    std::mt19937_64 rng(75);
    FiniteSystem sys = testutil::random_system(rng, 6);
    ProbMeasure mu = random_measure(rng, 6);
    ProbMeasure start = random_measure(rng, 6);
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 12; ++k) {
        double lambda = std::ldexp(1.0, -k);
        ProbMeasure mk(6);
        for (int i = 0; i < 6; ++i) mk[i] = lambda * start[i] + (1 - lambda) * mu[i];
        TransportPlan plan = optimal_coupling(mk, mu, sys.dist);
        CHECK(plan.cost <= prev + 1e-12);
        prev = plan.cost;
        if (k == 12) {
            CHECK(plan.cost <= 1e-3);
            // off-diagonal mass vanishes with the cost
            double off = 0;
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j)
                    if (i != j) off += plan.pi[i][j];
            CHECK(off <= std::ldexp(1.0, -12) + 1e-9);
        }
    }
}
