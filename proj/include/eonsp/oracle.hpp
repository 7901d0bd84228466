#ifndef EONSP_ORACLE_HPP
#define EONSP_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "eonsp/modulation.hpp"
#include "eonsp/network.hpp"
#include "eonsp/rng.hpp"
#include "eonsp/solver.hpp"

// Reference implementations used to verify the production code. Everything
// here evaluates spectrum sets per unit on uint64 bitmasks and enumerates
// paths exhaustively; none of it calls the interval algebra or the solvers
// it is meant to check.
namespace eonsp::oracle {

// Per-unit reference for spectrum sets with S <= 64. Bit i set = unit i free.
namespace bits {

    inline std::uint64_t full(int units)
    {
        return units >= 64 ? ~0ULL : (1ULL << units) - 1;
    }

    inline std::uint64_t window_mask(int start, int width)
    {
        return (width >= 64 ? ~0ULL : (1ULL << width) - 1) << start;
    }

    inline bool contains_window(std::uint64_t set, int start, int width)
    {
        const std::uint64_t w = window_mask(start, width);
        return width > 0 && (set & w) == w;
    }

    std::uint64_t constrict(std::uint64_t set, int min_width);
    std::optional<int> first_fit(std::uint64_t set, int units, int width);
    std::optional<int> last_fit(std::uint64_t set, int units, int width);

    // Canonical (lo, hi) runs of the mask, for comparison against interval
    // representations.
    std::vector<std::pair<int, int>> runs(std::uint64_t set, int units);

} // namespace bits

// Exhaustive (simple path, level, window) search over bitmask availability,
// under the shared solver total order: cost, width, start, path. Intended
// for V <= 8 or so.
SolveResult brute_force_solve(const Network& net, const std::vector<std::uint64_t>& avail,
                              const Demand& d, const ModulationTable& table);

// Small randomized instance for solver cross-checks. Availability lives in
// the masks; the network's slot sets are built from those masks.
struct Instance {
    Network net;
    std::vector<std::uint64_t> avail_masks;
    Demand demand;
    ModulationTable table{{{1.0, 1}}};
    // Lattice coordinates make exact cost ties likely; solver paths are
    // only required to match the oracle's verbatim when this is false.
    bool lattice = false;
};

// Random connected instance with V <= max_vertices (>= 2), S <= max_units
// (<= 64), fragmented availability, a random 1..4 level table and a random
// demand. Half the instances place vertices on a small integer lattice so
// exact cost ties occur; the rest use continuous coordinates.
Instance generate_instance(Rng& rng, int max_vertices = 8, int max_units = 16);

} // namespace eonsp::oracle

#endif
