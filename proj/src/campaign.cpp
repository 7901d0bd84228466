#include "eonsp/campaign.hpp"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

#include "eonsp/csv.hpp"
#include "eonsp/errors.hpp"
#include "eonsp/gabriel.hpp"

namespace eonsp {

namespace fs = std::filesystem;

std::vector<CampaignCell> enumerate_cells(const CampaignSpec& spec)
{
    std::vector<CampaignCell> cells;
    char name[160];
    for (int v : spec.vertex_counts)
        for (int g = 0; g < spec.graphs_per_size; ++g)
            for (int units : spec.unit_counts)
                for (double frac : spec.fractions)
                    for (std::uint64_t seed : spec.seeds) {
                        CampaignCell cell;
                        cell.vertices = v;
                        cell.graph_index = g;
                        cell.topology = "g" + std::to_string(v) + "_" + std::to_string(g);
                        cell.units = units;
                        cell.fraction = frac;
                        cell.seed = seed;
                        std::snprintf(name, sizeof name, "%s_S%d_f%g_s%llu.csv",
                                      cell.topology.c_str(), units, frac,
                                      static_cast<unsigned long long>(seed));
                        cell.csv_path = (fs::path(spec.out_dir) / name).string();
                        cells.push_back(cell);
                    }
    return cells;
}

CampaignResult run_campaign(const CampaignSpec& spec)
{
    fs::create_directories(spec.out_dir);
    const fs::path topo_dir = fs::path(spec.out_dir) / "topos";
    fs::create_directories(topo_dir);

    // Topologies are shared across units/fraction/seed cells: graph i of
    // size V uses generator seed topology_seed + i.
    std::vector<std::pair<std::string, Network>> topologies;
    for (int v : spec.vertex_counts)
        for (int g = 0; g < spec.graphs_per_size; ++g) {
            const std::string name = "g" + std::to_string(v) + "_" + std::to_string(g);
            const fs::path file = topo_dir / (name + ".topo");
            Network net;
            if (fs::exists(file)) {
                net = load_topology(file.string());
            } else {
                net = generate_gabriel_connected(v, spec.topology_seed + g);
                save_topology(net, file.string());
            }
            net.name = name;
            topologies.emplace_back(name, std::move(net));
        }
    auto topology_for = [&](const CampaignCell& cell) -> const Network& {
        for (const auto& [name, net] : topologies)
            if (name == cell.topology)
                return net;
        throw ConfigError("no topology " + cell.topology);
    };

    CampaignResult result;
    result.cells = enumerate_cells(spec);

    std::atomic<std::size_t> next{0};
    std::mutex mutex;
    std::atomic<int> executed{0}, skipped{0};

    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= result.cells.size())
                return;
            const CampaignCell& cell = result.cells[i];
            if (spec.resume && fs::exists(cell.csv_path)) {
                ++skipped;
                continue;
            }
            try {
                const Network& topo = topology_for(cell);
                SimConfig cfg;
                cfg.topology = &topo;
                cfg.units = cell.units;
                cfg.mean_demand_fraction = cell.fraction;
                cfg.seed = cell.seed;
                cfg.max_utilization = spec.max_utilization;
                cfg.block_cap = spec.block_cap;
                cfg.run_filtered = spec.run_filtered;
                cfg.run_generic = spec.run_generic;
                cfg.modulation_levels = spec.modulation_levels;
                cfg.reach_factor = spec.reach_factor;
                const auto records = run_simulation(cfg);

                SimMeta meta;
                meta.topology = cell.topology;
                meta.vertices = topo.vertex_count();
                meta.edges = topo.edge_count();
                meta.units = cell.units;
                meta.mean_demand = mean_units_for(cell.fraction, cell.units);
                meta.seed = cell.seed;
                const std::string tmp = cell.csv_path + ".part";
                write_calls_csv(tmp, meta, records);
                fs::rename(tmp, cell.csv_path);
                ++executed;
            } catch (const std::exception& e) {
                std::lock_guard lock(mutex);
                result.failed_cells.push_back(cell.csv_path + ": " + e.what());
            }
        }
    };

    const int jobs = std::max(1, spec.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    result.executed = executed;
    result.skipped = skipped;

    for (const CampaignCell& cell : result.cells)
        if (fs::exists(cell.csv_path))
            result.csv_paths.push_back(cell.csv_path);
    result.merged_csv = (fs::path(spec.out_dir) / "merged.csv").string();
    merge_calls_csv(result.csv_paths, result.merged_csv);

    if (!result.failed_cells.empty()) {
        std::ofstream manifest(fs::path(spec.out_dir) / "failed_cells.txt");
        for (const std::string& line : result.failed_cells)
            manifest << line << '\n';
    }
    return result;
}

} // namespace eonsp
