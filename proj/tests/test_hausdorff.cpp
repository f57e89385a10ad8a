#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "meandim/hausdorff.hpp"

using namespace meandim;

TEST_CASE("exact content matches the all-subset oracle (n <= 8)") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        FiniteSystem sys = testutil::random_system(rng, n);
        std::vector<double> phi = testutil::random_potential(rng, n, 0.5);
        for (double eps : {0.2, 0.6, 1.4}) {
            for (double tau : {0.0, 0.05}) {
                for (double s : {0.6, 1.0, 2.0}) {
                    HausdorffQuery q{s, eps, tau};
                    double got = hausdorff_content(sys.dist, phi, q, CoverMode::Exact);
                    double want = testutil::oracle_hausdorff_content(sys.dist, phi, s, eps, tau);
                    CHECK(got == doctest::Approx(want).epsilon(1e-10));
                }
            }
        }
    }
}

TEST_CASE("greedy content upper-bounds exact") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 15; ++trial) {
        FiniteSystem sys = testutil::random_system(rng, 8);
        std::vector<double> phi = testutil::random_potential(rng, 8, 0.4);
        HausdorffQuery q{1.2, 0.5, 0.02};
        double exact = hausdorff_content(sys.dist, phi, q, CoverMode::Exact);
        double greedy = hausdorff_content(sys.dist, phi, q, CoverMode::Greedy);
        CHECK(greedy >= exact - 1e-12);
    }
}

TEST_CASE("content conventions: 0^0 = 1 and the s-below-potential guard") {
    // two coincident points: diam 0, tau 0
    FiniteSystem sys;
    sys.points = {"a", "b"};
    sys.dist = Matrix(2);
    sys.time_map = {1, 0};
    std::vector<double> phi = {0.5, 0.5};
    // s = sup phi on a zero-diameter set: weight 0^0 = 1
    CHECK(hausdorff_content(sys.dist, phi, {0.5, 0.3, 0.0}, CoverMode::Exact) ==
          doctest::Approx(1.0));
    // s above sup phi: weight 0^positive = 0
    CHECK(hausdorff_content(sys.dist, phi, {0.8, 0.3, 0.0}, CoverMode::Exact) ==
          doctest::Approx(0.0));
    CHECK_THROWS_AS(hausdorff_content(sys.dist, phi, {0.2, 0.3, 0.0}, CoverMode::Exact),
                    std::invalid_argument);
}

TEST_CASE("dim at scale: grain-free value is max potential") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 10; ++trial) {
        FiniteSystem sys = testutil::random_system(rng, 6);
        std::vector<double> phi = testutil::random_potential(rng, 6, 0.8);
        double maxphi = *std::max_element(phi.begin(), phi.end());
        double dim = dim_at_scale(sys.dist, phi, 0.3, 0.0);
        // tau = 0: singletons cost 0 for s > max phi, so the dimension
        // bisection collapses onto max phi
        CHECK(dim == doctest::Approx(maxphi).epsilon(1e-5));
    }
}

TEST_CASE("dim at scale grows with a positive grain and stays bracketed") {
    std::mt19937_64 rng(34);
    FiniteSystem sys = testutil::random_system(rng, 7);
    std::vector<double> phi = testutil::random_potential(rng, 7, 0.5);
    double maxphi = *std::max_element(phi.begin(), phi.end());
    double d0 = dim_at_scale(sys.dist, phi, 0.4, 0.0);
    double dt = dim_at_scale(sys.dist, phi, 0.4, 0.05);
    CHECK(dt >= d0 - 1e-9);
    CHECK(dt >= maxphi - 1e-9);
}

TEST_CASE("dim at scale rejects nonmonotone configurations") {
    FiniteSystem sys;
    sys.points = {"a", "b"};
    sys.dist = Matrix(2);
    sys.dist.at(0, 1) = sys.dist.at(1, 0) = 3.0;  // diameter above 1
    sys.time_map = {1, 0};
    std::vector<double> phi = {0.0, 0.0};
    CHECK_THROWS_AS(dim_at_scale(sys.dist, phi, 4.0, 0.0), std::runtime_error);
    CHECK_THROWS_AS(dim_at_scale(sys.dist, phi, 0.5, 1.5), std::runtime_error);
}

TEST_CASE("mean Hausdorff profile with automatic grain") {
    // scaled planar system: Bowen diameters and the auto grain stay below 1
    std::mt19937_64 rng(32);
    FiniteSystem sys = testutil::random_system(rng, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) sys.dist.at(i, j) *= 0.5;
    Potential phi{std::vector<double>(sys.size(), 0.0), "0"};
    auto rows = mean_hausdorff_profile(sys, phi, {0.5, 0.25}, 3, MetricKind::Max);
    CHECK(rows.size() == 6);
    for (const auto& r : rows) {
        CHECK(r.tau_used > 0.0);
        CHECK(r.dim >= -1e-9);
    }
    // average metric variant also runs
    auto rows2 = mean_hausdorff_profile(sys, phi, {0.5}, 2, MetricKind::Average);
    CHECK(rows2.size() == 2);
}
