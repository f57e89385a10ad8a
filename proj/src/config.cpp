#include "meandim/config.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "meandim/measures.hpp"

namespace meandim {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

LoadedSystem system_from_json(const json& j, int point_budget) {
    LoadedSystem ls;
    const std::string type = j.at("type").get<std::string>();
    if (type == "explicit") {
        FiniteSystem& sys = ls.sys;
        sys.points = j.at("points").get<std::vector<std::string>>();
        const int n = static_cast<int>(sys.points.size());
        sys.dist = Matrix(n);
        auto rows = j.at("metric");
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                sys.dist.at(i, k) = rows.at(i).at(k).get<double>();
        sys.time_map = j.at("time_map").get<std::vector<int>>();
        sys.label = j.value("label", std::string("explicit"));
    } else if (type == "symbolic") {
        ls.has_model = true;
        ls.model.alphabet_values = uniform_grid(j.at("levels").get<int>());
        ls.model.period = j.at("period").get<int>();
        ls.model.window = j.value("window", 16);
        ls.sys = build_symbolic(ls.model, point_budget);
    } else if (type == "cycle") {
        const int L = j.at("size").get<int>();
        if (L < 1) throw std::invalid_argument("cycle: size < 1");
        FiniteSystem& sys = ls.sys;
        sys.dist = Matrix(L);
        for (int i = 0; i < L; ++i) {
            sys.points.push_back("c" + std::to_string(i));
            sys.time_map.push_back((i + 1) % L);
            for (int k = 0; k < L; ++k) {
                int gap = std::abs(i - k);
                gap = std::min(gap, L - gap);
                sys.dist.at(i, k) = L > 1 ? 2.0 * gap / L : 0.0;
            }
        }
        sys.label = "cycle" + std::to_string(L);
    } else {
        throw std::invalid_argument("unknown system type: " + type);
    }
    ls.sys.validate();
    return ls;
}

Potential potential_from_json(const json& j, const LoadedSystem& ls) {
    Potential phi;
    const std::string type = j.at("type").get<std::string>();
    const int n = ls.sys.size();
    if (type == "values") {
        phi.values = j.at("values").get<std::vector<double>>();
        if (static_cast<int>(phi.values.size()) != n)
            throw std::invalid_argument("potential: size mismatch");
        phi.label = j.value("label", std::string("values"));
    } else if (type == "constant") {
        phi.values.assign(n, j.at("value").get<double>());
        phi.label = "constant";
    } else if (type == "coordinate") {
        if (!ls.has_model)
            throw std::invalid_argument("potential coordinate: needs a symbolic system");
        phi.values.resize(n);
        for (int i = 0; i < n; ++i)
            phi.values[i] = ls.model.alphabet_values[symbolic_digits(ls.model, i)[0]];
        phi.label = "x0";
    } else {
        throw std::invalid_argument("unknown potential type: " + type);
    }
    return phi;
}

ProbMeasure measure_from_json(const json& j, const LoadedSystem& ls) {
    const std::string type = j.at("type").get<std::string>();
    const int n = ls.sys.size();
    if (type == "uniform") return ProbMeasure(n, 1.0 / n);
    if (type == "point") {
        ProbMeasure mu(n, 0.0);
        mu.at(j.at("index").get<int>()) = 1.0;
        return mu;
    }
    if (type == "values") {
        ProbMeasure mu = j.at("values").get<std::vector<double>>();
        check_normalized(mu, 1e-9);
        if (static_cast<int>(mu.size()) != n)
            throw std::invalid_argument("measure: size mismatch");
        return mu;
    }
    if (type == "product") {
        if (!ls.has_model)
            throw std::invalid_argument("measure product: needs a symbolic system");
        return product_measure(ls.model, j.at("symbol_weights").get<std::vector<double>>());
    }
    if (type == "top_interval") {
        if (!ls.has_model)
            throw std::invalid_argument("measure top_interval: needs a symbolic system");
        return product_measure(
            ls.model, top_interval_weights(ls.model.alphabet_values, j.at("k").get<int>()));
    }
    throw std::invalid_argument("unknown measure type: " + type);
}

MarkerFunction psi_from_json(const json& j, const FiniteSystem& sys) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "stride") return stride_marker(sys, j.at("stride").get<int>());
    if (type == "values") {
        MarkerFunction psi;
        for (const auto& pair : j.at("values")) {
            long long num = pair.at(0).get<long long>();
            long long den = pair.at(1).get<long long>();
            psi.values.push_back(Rat(num, den));
        }
        psi.validate(sys);
        return psi;
    }
    throw std::invalid_argument("unknown psi type: " + type);
}

Scenario scenario_from_json(const json& j) {
    Scenario sc;
    sc.system = system_from_json(j.at("system"), j.value("point_budget", 4096));
    sc.phi = potential_from_json(j.at("phi"), sc.system);
    if (j.contains("measures")) {
        for (const auto& mj : j.at("measures")) {
            sc.measures.push_back(measure_from_json(mj, sc.system));
            sc.measure_labels.push_back(mj.value("label", mj.at("type").get<std::string>()));
        }
    }
    sc.eps_grid = j.at("eps_grid").get<std::vector<double>>();
    if (sc.eps_grid.empty()) throw std::invalid_argument("scenario: empty eps grid");
    sc.N_max = j.value("N_max", 3);
    sc.seed = j.value("seed", 0ULL);
    sc.exact_budget = j.value("exact_budget", 20);
    sc.label = j.value("label", std::string("scenario"));
    return sc;
}

}  // namespace meandim
