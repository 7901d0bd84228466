#ifndef EONSP_MODULATION_HPP
#define EONSP_MODULATION_HPP

#include <optional>
#include <string>
#include <vector>

namespace eonsp {

// Ordered modulation levels. Level 1 is the least spectrally efficient:
// longest reach, divisor 1. Reaches strictly decrease and divisors strictly
// increase with the level index, so the most efficient level feasible at a
// given path cost is simply the last one whose reach still covers it.
class ModulationTable {
public:
    struct Level {
        double reach = 0;
        int divisor = 1;
    };

    // Feasible (level, contiguous width) pair for one demand at one cost.
    struct Requirement {
        int level = 1; // 1-based
        int width = 1;
    };

    explicit ModulationTable(std::vector<Level> levels);

    // Default progression: reach_1 = factor * longest_sp, halving per level;
    // divisor_m = m (one through four matches BPSK/QPSK/8-QAM/16-QAM).
    static ModulationTable default_table(double longest_sp, int levels, double reach_factor = 1.5);

    // "r1:d1,r2:d2,..." as accepted on the command line.
    static ModulationTable from_string(const std::string& text);

    int level_count() const { return static_cast<int>(levels_.size()); }
    const Level& level(int index_1based) const { return levels_[index_1based - 1]; }
    double max_reach() const { return levels_.front().reach; }

    // Most efficient level feasible at this cost together with the
    // contiguous width it needs, ceil(demand / divisor). nullopt when the
    // cost exceeds every reach. Width is non-decreasing in cost and in
    // demand, which is what makes per-edge constriction sound.
    std::optional<Requirement> requirement(int demand_units, double cost) const;

    std::optional<int> required_width(int demand_units, double cost) const;
    std::optional<int> best_level(int demand_units, double cost) const;

    std::string to_string() const;

private:
    std::vector<Level> levels_;
};

} // namespace eonsp

#endif
