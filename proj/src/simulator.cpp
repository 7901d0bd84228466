#include "eonsp/simulator.hpp"

#include <chrono>
#include <cmath>

#include "eonsp/errors.hpp"
#include "eonsp/solver_filtered.hpp"
#include "eonsp/solver_generic.hpp"

namespace eonsp {

const char* algorithm_name(Algorithm a)
{
    return a == Algorithm::Filtered ? "filtered" : "generic";
}

Demand next_demand(Rng& rng, const Network& net, int mean_units)
{
    Demand d;
    d.src = static_cast<int>(rng.next_int(0, net.vertex_count() - 1));
    d.dst = static_cast<int>(rng.next_int(0, net.vertex_count() - 2));
    if (d.dst >= d.src)
        ++d.dst;
    d.units = static_cast<int>(rng.next_int(1, 2 * static_cast<std::int64_t>(mean_units) - 1));
    return d;
}

double utilization(const Network& net)
{
    if (net.edge_count() == 0 || net.units() == 0)
        return 0;
    std::int64_t free_units = 0;
    for (int e = 0; e < net.edge_count(); ++e)
        free_units += net.availability(e).count();
    const std::int64_t total = static_cast<std::int64_t>(net.edge_count()) * net.units();
    return static_cast<double>(total - free_units) / static_cast<double>(total);
}

namespace {

std::int64_t now_ns()
{
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

} // namespace

std::vector<CallRecord> run_simulation(const SimConfig& cfg)
{
    if (!cfg.topology)
        throw ConfigError("simulation needs a topology");
    if (cfg.units < 1)
        throw ConfigError("units per edge must be positive");
    if (cfg.mean_demand_fraction <= 0 || cfg.mean_demand_fraction >= 1)
        throw ConfigError("mean demand fraction must lie in (0, 1)");
    if (cfg.max_utilization < 0 || cfg.max_utilization > 1)
        throw ConfigError("max utilization must lie in [0, 1]");
    if (!cfg.run_filtered && !cfg.run_generic)
        throw ConfigError("at least one algorithm must be enabled");
    if (cfg.topology->vertex_count() < 2)
        throw ConfigError("topology needs at least 2 vertices");

    Network net = *cfg.topology;
    net.attach_units(cfg.units);
    const int mean_units = mean_units_for(cfg.mean_demand_fraction, cfg.units);

    const ModulationTable table = cfg.table
        ? *cfg.table
        : ModulationTable::default_table(longest_shortest_path(net), cfg.modulation_levels,
                                         cfg.reach_factor);

    Rng rng(cfg.seed);
    std::vector<CallRecord> records;

    // Warm-up: one demand solved untimed and unrecorded, not applied.
    {
        const Demand warmup = next_demand(rng, net, mean_units);
        if (cfg.run_filtered)
            solve_filtered(net, warmup, table);
        if (cfg.run_generic)
            solve_generic(net, warmup, table);
    }

    int consecutive_blocked = 0;
    for (int call_index = 0;; ++call_index) {
        const double util = utilization(net);
        if (util >= cfg.max_utilization)
            break;

        const Demand demand = next_demand(rng, net, mean_units);

        SolveResult filtered_result, generic_result;
        auto timed = [&](Algorithm algo) {
            const std::int64_t t0 = now_ns();
            SolveResult result = algo == Algorithm::Filtered ? solve_filtered(net, demand, table)
                                                             : solve_generic(net, demand, table);
            // Clamped to 1ns so ratios stay finite and positive.
            const std::int64_t elapsed = std::max<std::int64_t>(1, now_ns() - t0);
            CallRecord rec;
            rec.call_index = call_index;
            rec.utilization_before = util;
            rec.algorithm = algo;
            rec.time_ns = elapsed;
            if (result) {
                rec.accepted = true;
                rec.cost = result->cost;
                rec.level = result->level;
                rec.window = result->window;
                rec.hops = static_cast<int>(result->path.size()) - 1;
            }
            records.push_back(rec);
            if (algo == Algorithm::Filtered)
                filtered_result = std::move(result);
            else
                generic_result = std::move(result);
        };

        // Alternate which solver is timed first so neither systematically
        // runs with the caches pre-warmed by the other.
        if (cfg.run_filtered && cfg.run_generic && call_index % 2 == 1) {
            timed(Algorithm::Generic);
            timed(Algorithm::Filtered);
        } else {
            if (cfg.run_filtered)
                timed(Algorithm::Filtered);
            if (cfg.run_generic)
                timed(Algorithm::Generic);
        }

        const SolveResult& applied = cfg.run_generic ? generic_result : filtered_result;
        if (applied) {
            consecutive_blocked = 0;
            for (std::size_t i = 0; i + 1 < applied->path.size(); ++i) {
                const auto edge = net.edge_between(applied->path[i], applied->path[i + 1]);
                net.allocate(*edge, applied->window);
            }
        } else if (++consecutive_blocked >= cfg.block_cap) {
            break;
        }
    }
    return records;
}

} // namespace eonsp
