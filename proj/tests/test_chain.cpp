#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "meandim/chain.hpp"
#include "meandim/config.hpp"

using namespace meandim;

TEST_CASE("pressure defect: fixed point with zero potential") {
    FiniteSystem sys;
    sys.points = {"a", "b"};
    sys.dist = Matrix(2);
    sys.dist.at(0, 1) = sys.dist.at(1, 0) = 1.0;
    sys.time_map = {0, 1};
    Potential phi{{0.0, 0.0}, "0"};
    ProbMeasure mu = {1.0, 0.0};
    for (double eps : {0.5, 0.25}) {
        PressureDefectCell cell = verify_pressure_defect(sys, phi, mu, eps, 2);
        CHECK(cell.converged);
        CHECK(cell.integral == doctest::Approx(0.0));
        // a point mass at a fixed point needs no information and no cover mass
        // beyond one set, but the covering side counts the second point too
        CHECK(cell.defect >= -1e-2);
        CHECK(cell.rate >= -1e-12);
    }
    // eps above the diameter: both sides collapse
    PressureDefectCell wide = verify_pressure_defect(sys, phi, mu, 2.0, 2);
    CHECK(wide.rate == doctest::Approx(0.0));
    CHECK(wide.rhs >= wide.lhs - 1e-12);
}

TEST_CASE("pressure defect: random small systems stay above the tolerance") {
    std::mt19937_64 rng(91);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        FiniteSystem sys = testutil::random_system(rng, n);
        Potential phi{testutil::random_potential(rng, n), "phi"};
        ProbMeasure mu(n, 1.0 / n);
        for (double eps : {0.6, 0.3}) {
            for (int N : {1, 2, 3}) {
                PressureDefectCell cell = verify_pressure_defect(sys, phi, mu, eps, N);
                CHECK(cell.converged);
                CHECK(cell.defect >= -1e-2);
                CHECK(cell.lhs == doctest::Approx(cell.rate +
                                                  std::log2(1.0 / eps) * cell.integral));
            }
        }
    }
}

TEST_CASE("chain verification on the bundled small scenario") {
    Scenario sc = scenario_from_json(load_json_file("data/scenario_small.json"));
    ChainReport rep = verify_chain(sc);
    CHECK(rep.all_pass());
    CHECK(rep.violations() == 0);
    REQUIRE_FALSE(rep.rows.empty());
    bool saw_hausdorff = false, saw_widim = false, saw_pressure = false;
    for (const auto& row : rep.rows) {
        if (row.check == "hausdorff_vs_cover") saw_hausdorff = true;
        if (row.check == "widim_chain") saw_widim = true;
        if (row.check == "pressure_defect") saw_pressure = true;
        CHECK(row.pass);
    }
    CHECK(saw_hausdorff);
    CHECK(saw_widim);
    CHECK(saw_pressure);
}

TEST_CASE("system config round trips") {
    LoadedSystem cyc = system_from_json({{"type", "cycle"}, {"size", 8}});
    CHECK(cyc.sys.size() == 8);
    CHECK(cyc.sys.time_map[7] == 0);
    CHECK(cyc.sys.dist.at(0, 4) == doctest::Approx(1.0));  // antipodal, scaled
    CHECK(cyc.sys.dist.at(0, 1) == doctest::Approx(0.25));

    LoadedSystem sym = system_from_json(
        {{"type", "symbolic"}, {"levels", 2}, {"period", 2}, {"window", 6}});
    CHECK(sym.has_model);
    CHECK(sym.sys.size() == 4);

    json expl = {{"type", "explicit"},
                 {"points", {"p", "q"}},
                 {"metric", {{0.0, 1.0}, {1.0, 0.0}}},
                 {"time_map", {1, 0}}};
    LoadedSystem ex = system_from_json(expl);
    CHECK(ex.sys.size() == 2);
    CHECK_FALSE(ex.has_model);

    CHECK_THROWS_AS(system_from_json({{"type", "nope"}}), std::invalid_argument);
    CHECK_THROWS_AS(system_from_json({{"type", "symbolic"},
                                      {"levels", 64},
                                      {"period", 8},
                                      {"window", 6}}),
                    std::invalid_argument);  // over the point budget
}

TEST_CASE("potential, measure and marker configs") {
    LoadedSystem sym = system_from_json(
        {{"type", "symbolic"}, {"levels", 2}, {"period", 2}, {"window", 6}});

    Potential coord = potential_from_json({{"type", "coordinate"}}, sym);
    CHECK(coord.values.size() == sym.sys.size());
    for (double v : coord.values) CHECK((v == doctest::Approx(0.0) || v == doctest::Approx(1.0)));

    Potential cst = potential_from_json({{"type", "constant"}, {"value", 0.4}}, sym);
    for (double v : cst.values) CHECK(v == doctest::Approx(0.4));

    ProbMeasure uni = measure_from_json({{"type", "uniform"}}, sym);
    for (double v : uni) CHECK(v == doctest::Approx(0.25));
    ProbMeasure pt = measure_from_json({{"type", "point"}, {"index", 2}}, sym);
    CHECK(pt[2] == doctest::Approx(1.0));
    ProbMeasure prod =
        measure_from_json({{"type", "product"}, {"symbol_weights", {0.25, 0.75}}}, sym);
    double total = 0;
    for (double v : prod) total += v;
    CHECK(total == doctest::Approx(1.0));
    ProbMeasure top = measure_from_json({{"type", "top_interval"}, {"k", 2}}, sym);
    total = 0;
    for (double v : top) total += v;
    CHECK(total == doctest::Approx(1.0));

    LoadedSystem cyc = system_from_json({{"type", "cycle"}, {"size", 10}});
    MarkerFunction psi = psi_from_json({{"type", "stride"}, {"stride", 5}}, cyc.sys);
    CHECK(psi.values[0] == Rat(1));
    CHECK(psi.values[1] == Rat(0));
    MarkerFunction vals = psi_from_json(
        {{"type", "values"},
         {"values", {{1, 1}, {0, 1}, {1, 2}, {0, 1}, {0, 1}, {1, 1}, {0, 1}, {0, 1}, {1, 3}, {0, 1}}}},
        cyc.sys);
    CHECK(vals.values[2] == Rat(1, 2));
    CHECK_NOTHROW(vals.validate(cyc.sys));

    CHECK_THROWS_AS(potential_from_json({{"type", "bogus"}}, sym), std::invalid_argument);
    CHECK_THROWS_AS(measure_from_json({{"type", "values"}, {"values", {0.5, 0.6}}}, sym),
                    std::invalid_argument);
}

TEST_CASE("scenario config parses labels, grids and budgets") {
    Scenario sc = scenario_from_json(load_json_file("data/scenario_small.json"));
    CHECK(sc.system.sys.size() > 0);
    CHECK(sc.measures.size() == sc.measure_labels.size());
    CHECK(sc.measures.size() >= 2);
    CHECK(sc.eps_grid.size() == 3);
    CHECK(sc.N_max == 3);
}
