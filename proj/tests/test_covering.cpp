#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "meandim/covering.hpp"

using namespace meandim;

TEST_CASE("exact covering number matches the all-subset oracle (n <= 8)") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        FiniteSystem sys = testutil::random_system(rng, n);
        std::vector<double> phi = testutil::random_potential(rng, n);
        for (double eps : {0.15, 0.4, 0.8, 1.7}) {
            double got = covering_number(sys.dist, phi, eps, CoverMode::Exact).value;
            double want = testutil::oracle_covering_number(sys.dist, phi, eps);
            CHECK(got == doctest::Approx(want).epsilon(1e-10));
        }
    }
}

TEST_CASE("greedy within the 1 + ln n factor and never below exact") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 4 + static_cast<int>(rng() % 9);  // up to 12
        FiniteSystem sys = testutil::random_system(rng, n);
        std::vector<double> phi = testutil::random_potential(rng, n);
        for (double eps : {0.2, 0.5, 1.2}) {
            double exact = covering_number(sys.dist, phi, eps, CoverMode::Exact).value;
            double greedy = covering_number(sys.dist, phi, eps, CoverMode::Greedy).value;
            CHECK(greedy >= exact - 1e-10);
            CHECK(greedy <= exact * (1.0 + std::log(static_cast<double>(n))) + 1e-9);
        }
    }
}

TEST_CASE("returned cover is feasible and achieves the reported value") {
    std::mt19937_64 rng(23);
    FiniteSystem sys = testutil::random_system(rng, 8);
    std::vector<double> phi = testutil::random_potential(rng, 8);
    for (auto mode : {CoverMode::Exact, CoverMode::Greedy}) {
        CoveringResult res = covering_number(sys.dist, phi, 0.5, mode);
        std::vector<char> covered(8, 0);
        double total = 0.0;
        for (const auto& cs : res.cover.sets) {
            CHECK(cs.diam < 0.5);
            total += std::pow(2.0, cs.sup_phi);  // (1/eps)^sup with eps = 0.5
            for (int p : cs.pts) covered[p] = 1;
        }
        for (char c : covered) CHECK(c == 1);
        CHECK(total == doctest::Approx(res.value).epsilon(1e-10));
    }
}

TEST_CASE("covering number edge cases") {
    std::mt19937_64 rng(24);
    FiniteSystem sys = testutil::random_system(rng, 5);
    std::vector<double> zero(5, 0.0);
    // eps above diameter: one set, weight (1/eps)^0 = 1
    double big = sys.dist.max_entry() * 2.0 + 1.0;
    CHECK(covering_number(sys.dist, zero, big, CoverMode::Exact).value ==
          doctest::Approx(1.0));
    // eps below the minimum distance: singletons forced
    double tiny = sys.min_positive_distance() / 2;
    CHECK(covering_number(sys.dist, zero, tiny, CoverMode::Exact).value ==
          doctest::Approx(5.0));
    CHECK_THROWS_AS(covering_number(sys.dist, zero, 0.0, CoverMode::Exact),
                    std::invalid_argument);
}

TEST_CASE("pressure profile: Fekete inf and full-shift entropy anchor") {
    SymbolicModel model;
    model.alphabet_values = uniform_grid(2);
    model.period = 3;
    model.window = 8;
    FiniteSystem sys = build_symbolic(model);
    Potential zero{std::vector<double>(sys.size(), 0.0), "0"};

    std::vector<double> eps = {0.25, 0.125, 0.0625};
    PressureProfile prof = pressure_profile(sys, zero, eps, 6, CoverMode::Exact, 8);
    for (double e : eps) {
        double inf_rate = prof.pressure_upper(e);
        for (const auto& r : prof.rows)
            if (r.eps == e) CHECK(inf_rate <= r.rate + 1e-12);
        // 2^3 separated points, phi = 0: rate = 3/N, minimized at N = 6
        CHECK(inf_rate == doctest::Approx(0.5).epsilon(1e-9));
    }
}

TEST_CASE("mdim_M estimate flat for a finite model") {
    std::mt19937_64 rng(25);
    FiniteSystem sys = testutil::random_system(rng, 6);
    Potential zero{std::vector<double>(6, 0.0), "0"};
    double base = sys.min_positive_distance() / 2;
    std::vector<double> eps = {base, base / 2, base / 4, base / 8};
    PressureProfile prof = pressure_profile(sys, zero, eps, 2, CoverMode::Exact, 8);
    MdimMEstimate est = mdim_M_estimate(prof);
    // below the resolution floor the pressure is constant, slope ~ 0
    CHECK(std::abs(est.fit_slope) < 1e-9);
    CHECK(est.saturation_eps.has_value());
}

TEST_CASE("tame metric transform stays a metric and compresses distances") {
    std::mt19937_64 rng(26);
    FiniteSystem sys = testutil::random_system(rng, 7);
    FiniteSystem tame = tame_metric_transform(sys);
    CHECK_NOTHROW(tame.validate());
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            CHECK(tame.dist.at(i, j) <= sys.dist.at(i, j) + 1e-12);
    std::vector<double> deltas = {0.25, 0.5};
    std::vector<double> eps = {0.5, 0.25, 0.125, 0.0625};
    auto rows = tame_growth_report(tame, deltas, eps);
    CHECK(rows.size() == deltas.size() * eps.size());
    for (const auto& r : rows) CHECK(r.value >= 0.0);
}
