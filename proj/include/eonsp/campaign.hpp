#ifndef EONSP_CAMPAIGN_HPP
#define EONSP_CAMPAIGN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "eonsp/simulator.hpp"

namespace eonsp {

// Cross-product grid of simulations. Topologies g<V>_<i>.topo are generated
// (or reused) under out_dir/topos; each cell writes one calls CSV named
// after its coordinates, plus a merged CSV over all cells at the end.
struct CampaignSpec {
    std::vector<int> vertex_counts{25, 50, 100, 200};
    int graphs_per_size = 2;
    std::vector<int> unit_counts{100, 200, 400};
    std::vector<double> fractions{0.1, 0.05};
    std::vector<std::uint64_t> seeds{1, 2, 3};
    std::uint64_t topology_seed = 42;
    int modulation_levels = 4;
    double reach_factor = 1.5;
    double max_utilization = 0.6;
    int block_cap = 1000;
    bool run_filtered = true;
    bool run_generic = true;
    std::string out_dir = "campaign";
    int jobs = 1;
    bool resume = true; // skip cells whose CSV already exists

    std::size_t cell_count() const
    {
        return vertex_counts.size() * static_cast<std::size_t>(graphs_per_size)
            * unit_counts.size() * fractions.size() * seeds.size();
    }
};

struct CampaignCell {
    std::string topology; // g<V>_<i>
    int vertices = 0;
    int graph_index = 0;
    int units = 0;
    double fraction = 0;
    std::uint64_t seed = 0;
    std::string csv_path;
};

struct CampaignResult {
    std::vector<CampaignCell> cells;
    std::vector<std::string> csv_paths;    // one per completed cell
    std::vector<std::string> failed_cells; // cell name + error
    std::string merged_csv;
    int executed = 0;
    int skipped = 0;
};

std::vector<CampaignCell> enumerate_cells(const CampaignSpec& spec);

// Runs the whole grid (worker pool of spec.jobs threads, one network state
// per worker). Failed cells are recorded and do not abort the rest.
CampaignResult run_campaign(const CampaignSpec& spec);

} // namespace eonsp

#endif
