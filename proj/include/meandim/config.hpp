#ifndef MEANDIM_CONFIG_HPP
#define MEANDIM_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "meandim/info.hpp"
#include "meandim/spaces.hpp"
#include "meandim/tiling.hpp"

namespace meandim {

using nlohmann::json;

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

struct LoadedSystem {
    FiniteSystem sys;
    bool has_model = false;
    SymbolicModel model;
};

// {"type":"explicit","points":[...],"metric":[[...]],"time_map":[...]}
// {"type":"symbolic","levels":m,"period":p,"window":W}
// {"type":"cycle","size":L}  (rotation with the normalized circle metric)
LoadedSystem system_from_json(const json& j, int point_budget = 4096);

// {"type":"values","values":[...]} | {"type":"constant","value":c}
// {"type":"coordinate"}  (phi(x) = x_0, symbolic systems only)
Potential potential_from_json(const json& j, const LoadedSystem& ls);

// {"type":"uniform"} | {"type":"point","index":i} | {"type":"values","values":[...]}
// {"type":"product","symbol_weights":[...]}  (symbolic)
// {"type":"top_interval","k":k}  (symbolic; quantized uniform law on [1-1/k,1])
ProbMeasure measure_from_json(const json& j, const LoadedSystem& ls);

// {"type":"stride","stride":p} | {"type":"values","values":[[num,den],...]}
MarkerFunction psi_from_json(const json& j, const FiniteSystem& sys);

struct Scenario {
    LoadedSystem system;
    Potential phi;
    std::vector<ProbMeasure> measures;
    std::vector<std::string> measure_labels;
    std::vector<double> eps_grid;
    int N_max = 3;
    uint64_t seed = 0;
    int exact_budget = 20;
    std::string label;
};

Scenario scenario_from_json(const json& j);

}  // namespace meandim

#endif
