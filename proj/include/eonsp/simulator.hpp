#ifndef EONSP_SIMULATOR_HPP
#define EONSP_SIMULATOR_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "eonsp/modulation.hpp"
#include "eonsp/network.hpp"
#include "eonsp/rng.hpp"
#include "eonsp/solver.hpp"

namespace eonsp {

enum class Algorithm { Filtered, Generic };

const char* algorithm_name(Algorithm a);

struct SimConfig {
    const Network* topology = nullptr;
    int units = 0;
    double mean_demand_fraction = 0.1;
    std::uint64_t seed = 0;
    double max_utilization = 0.6;
    bool run_filtered = true;
    bool run_generic = true;
    int block_cap = 1000; // consecutive blocked demands before giving up
    int modulation_levels = 4;
    double reach_factor = 1.5;
    const ModulationTable* table = nullptr; // overrides the default table
};

// One solver invocation. In both-algorithm mode each call index yields two
// records operating on the identical network state.
struct CallRecord {
    int call_index = 0;
    double utilization_before = 0;
    Algorithm algorithm = Algorithm::Generic;
    bool accepted = false;
    double cost = 0;
    int level = 0;
    Window window;
    int hops = 0;
    std::int64_t time_ns = 0;
};

// Uniform src, uniform dst over the remaining vertices, units uniform on
// [1, 2*mean_units - 1] so the mean lands on mean_units.
Demand next_demand(Rng& rng, const Network& net, int mean_units);

inline int mean_units_for(double fraction, int units)
{
    return std::max<int>(1, static_cast<int>(std::llround(fraction * units)));
}

// Units in use over total units across all edges.
double utilization(const Network& net);

// Dynamic-traffic loop: demands arrive until utilization reaches the
// target (or block_cap consecutive demands block). Spectrum is never
// released. Each configured solver is timed on the same network state; the
// applied assignment is Generic Dijkstra's when both run. One untimed
// warm-up demand is consumed before recording starts. Identical configs
// replay identical record streams except the time_ns fields.
std::vector<CallRecord> run_simulation(const SimConfig& cfg);

} // namespace eonsp

#endif
