#ifndef EONSP_SOLVER_FILTERED_HPP
#define EONSP_SOLVER_FILTERED_HPP

#include "eonsp/solver.hpp"

namespace eonsp {

// Single-source shortest path from src to dst where an edge is traversable
// iff its availability contains the window; the check runs inline in the
// relaxation loop, edges are never pre-removed. Queue ordered by
// (distance, vertex id); on exact distance ties the lexicographically
// smaller predecessor path wins. Returns nullopt when dst is unreachable.
struct DijkstraResult {
    double distance = 0;
    std::vector<int> path; // src..dst
};
std::optional<DijkstraResult> dijkstra_inline(const Network& net, int src, int dst,
                                              const Window& window);

struct FilteredOptions {
    // Verification hook: selects the highest-start window per width instead
    // of the lowest. Used by mutation runs to prove the equivalence harness
    // catches policy drift; never enabled in production paths.
    bool last_fit = false;
};

// Filtered Graphs baseline: enumerates every (modulation level, window
// start) candidate level-major and start-minor, runs one inline-filtered
// Dijkstra per candidate, and keeps the best feasible one under the shared
// total order (so enumeration order never shows in the result).
SolveResult solve_filtered(const Network& net, const Demand& d, const ModulationTable& table,
                           const FilteredOptions& opts = {});

} // namespace eonsp

#endif
