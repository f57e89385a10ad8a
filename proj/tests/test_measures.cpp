#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "meandim/hausdorff.hpp"
#include "meandim/lp.hpp"
#include "meandim/measures.hpp"

using namespace meandim;

TEST_CASE("product measure basics and shift invariance") {
    SymbolicModel model;
    model.alphabet_values = uniform_grid(2);
    model.period = 2;
    model.window = 8;
    ProbMeasure mu = product_measure(model, {0.5, 0.5});
    for (double v : mu) CHECK(v == doctest::Approx(0.25));

    FiniteSystem sys = build_symbolic(model);
    ProbMeasure skew = product_measure(model, {0.3, 0.7});
    ProbMeasure pushed = pushforward(sys, skew);
    for (size_t i = 0; i < skew.size(); ++i)
        CHECK(pushed[i] == doctest::Approx(skew[i]).epsilon(1e-14));
}

TEST_CASE("top-interval weights quantize the uniform law on [1 - 1/k, 1]") {
    auto grid = uniform_grid(16);
    for (int k : {1, 2, 4}) {
        ProbMeasure w = top_interval_weights(grid, k);
        double total = 0, mean = 0;
        for (size_t j = 0; j < w.size(); ++j) {
            CHECK(w[j] >= 0.0);
            total += w[j];
            mean += w[j] * grid[j];
        }
        CHECK(total == doctest::Approx(1.0));
        CHECK(std::abs(mean - (1.0 - 0.5 / k)) <= 1.0 / 16);
        // mass only on the top part of the grid
        for (size_t j = 0; j < w.size(); ++j)
            if (grid[j] < 1.0 - 1.0 / k - 1.0 / 15) CHECK(w[j] == 0.0);
    }
}

TEST_CASE("integrate: constants, point masses, Birkhoff consistency") {
    std::mt19937_64 rng(61);
    FiniteSystem sys = testutil::random_system(rng, 6);
    Potential phi{testutil::random_potential(rng, 6), "phi"};
    ProbMeasure point(6, 0.0);
    point[3] = 1.0;
    CHECK(integrate(phi, point) == doctest::Approx(phi.values[3]));
    Potential c{std::vector<double>(6, 0.7), "c"};
    ProbMeasure mu(6, 1.0 / 6);
    CHECK(integrate(c, mu) == doctest::Approx(0.7));

    // invariant measure: int S_N phi = N int phi
    ProbMeasure inv = empirical_average(sys, mu, orbit_lcm(sys));
    Potential s3 = birkhoff_sum(sys, phi, 3);
    CHECK(integrate(s3, inv) == doctest::Approx(3.0 * integrate(phi, inv)).epsilon(1e-12));
}

TEST_CASE("empirical average: invariance at the orbit lcm, orbit oracle") {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 10; ++trial) {
        FiniteSystem sys = testutil::random_system(rng, 7);
        ProbMeasure nu(7, 0.0);
        nu[rng() % 7] = 1.0;
        long long L = orbit_lcm(sys);
        ProbMeasure avg = empirical_average(sys, nu, L);
        ProbMeasure pushed = pushforward(sys, avg);
        double mass = 0;
        for (size_t i = 0; i < avg.size(); ++i) {
            CHECK(pushed[i] == doctest::Approx(avg[i]).epsilon(1e-12));
            mass += avg[i];
        }
        CHECK(mass == doctest::Approx(1.0));
        // point mass spreads uniformly over its own orbit
        int start = -1;
        for (int i = 0; i < 7; ++i)
            if (nu[i] == 1.0) start = i;
        std::vector<int> orbit;
        int j = start;
        do {
            orbit.push_back(j);
            j = sys.time_map[j];
        } while (j != start);
        for (int p : orbit) CHECK(avg[p] == doctest::Approx(1.0 / orbit.size()));
    }
    // already invariant: unchanged at any n
    FiniteSystem sys = testutil::random_system(rng, 5);
    ProbMeasure uni(5, 0.2);
    ProbMeasure out = empirical_average(sys, uni, 3);
    for (double v : out) CHECK(v == doctest::Approx(0.2));
}

TEST_CASE("dense LP solver on hand-solved instances") {
    // max x + y, x <= 2, y <= 3, x + y <= 4
    LpResult r = solve_lp_max({{1, 0}, {0, 1}, {1, 1}}, {2, 3, 4}, {1, 1});
    REQUIRE(r.optimal);
    CHECK(r.value == doctest::Approx(4.0));
    // duality: b.y equals the optimum
    double dual_val = 2 * r.dual[0] + 3 * r.dual[1] + 4 * r.dual[2];
    CHECK(dual_val == doctest::Approx(4.0).epsilon(1e-10));

    // unbounded
    LpResult u = solve_lp_max({{-1.0, 0.0}}, {1.0}, {1.0, 0.0});
    CHECK_FALSE(u.optimal);

    // degenerate rhs zero
    LpResult z = solve_lp_max({{1.0, 1.0}, {1.0, -1.0}}, {0.0, 1.0}, {1.0, 1.0});
    REQUIRE(z.optimal);
    CHECK(z.value == doctest::Approx(0.0));
}

TEST_CASE("Frostman LP: hand-solved instances") {
    // single point, tau = 0: the singleton constraint pins mass to 0^s = 0
    Matrix one(1);
    FrostmanResult alone = frostman_measure(one, 1.0, 0.5, 0.0, ConstraintFamily::Subsets);
    CHECK(alone.lp_value == doctest::Approx(0.0));
    CHECK_FALSE(alone.normalizable);

    // 4 points pairwise 0.5, tau = 0.25, s = 2, delta = 0.6: singletons allow
    // 0.0625 each, pairs allow 0.5625 (slack) -> optimum 0.25
    Matrix four(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) four.at(i, j) = i == j ? 0.0 : 0.5;
    FrostmanResult res = frostman_measure(four, 2.0, 0.6, 0.25, ConstraintFamily::Subsets);
    CHECK(res.lp_value == doctest::Approx(0.25).epsilon(1e-10));
    CHECK_FALSE(res.normalizable);
    // with tau = 0 singletons force zero mass
    FrostmanResult res0 = frostman_measure(four, 2.0, 0.6, 0.0, ConstraintFamily::Subsets);
    CHECK(res0.lp_value == doctest::Approx(0.0));
}

TEST_CASE("Frostman LP duality gap and feasibility on the corpus (n <= 10)") {
    std::mt19937_64 rng(63);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        FiniteSystem sys = testutil::random_system(rng, n);
        for (auto family : {ConstraintFamily::Balls, ConstraintFamily::Subsets}) {
            FrostmanResult res = frostman_measure(sys.dist, 1.3, 0.8, 0.05, family);
            CHECK(std::abs(res.lp_value - res.dual_cover_value) <= 1e-9);
            // returned measure satisfies every constraint
            double total = res.normalizable ? 1.0 : res.lp_value;
            double scale = res.normalizable && res.lp_value > 0 ? 1.0 / res.lp_value : 1.0;
            (void)total;
            for (size_t c = 0; c < res.constraint_sets.size(); ++c) {
                double mass = 0;
                for (int p : res.constraint_sets[c]) mass += res.measure[p];
                CHECK(mass <= scale * res.constraint_bounds[c] + 1e-9);
            }
        }
    }
}

TEST_CASE("Frostman optimum certifies grained Hausdorff content (mass distribution)") {
    std::mt19937_64 rng(64);
    for (int trial = 0; trial < 8; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        FiniteSystem sys = testutil::random_system(rng, n);
        double s = 0.9, delta = 0.7, tau = 0.15;
        FrostmanResult res = frostman_measure(sys.dist, s, delta, tau,
                                              ConstraintFamily::Subsets);
        // min integral cover with the same (tau + diam)^s weights: the grained
        // content in sum form, matching the constraint family exactly
        double content = testutil::oracle_min_cover(
            sys.dist, delta, [&](uint64_t m) {
                return std::pow(tau + testutil::subset_diam(sys.dist, m), s);
            });
        CHECK(res.lp_value <= content + 1e-9);
        if (res.normalizable) CHECK(content >= 1.0 - 1e-9);
    }
}

TEST_CASE("Frostman guards") {
    Matrix d(3);
    CHECK_THROWS_AS(frostman_measure(d, 1.0, 0.5, -0.1, ConstraintFamily::Balls),
                    std::invalid_argument);
    CHECK_THROWS_AS(frostman_measure(d, 1.0, 0.0, 0.0, ConstraintFamily::Balls),
                    std::invalid_argument);
    Matrix big(20);
    CHECK_THROWS_AS(frostman_measure(big, 1.0, 0.5, 0.0, ConstraintFamily::Subsets),
                    std::invalid_argument);
}
