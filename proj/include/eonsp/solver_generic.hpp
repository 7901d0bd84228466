#ifndef EONSP_SOLVER_GENERIC_HPP
#define EONSP_SOLVER_GENERIC_HPP

#include <cstdint>
#include <vector>

#include "eonsp/solver.hpp"

namespace eonsp {

// Search label: cheapest known way to stand at a vertex with a given set of
// units still usable on every edge walked so far. omega is kept constricted,
// so every interval in it is at least as wide as the window the demand needs
// at this cost.
struct Label {
    double cost = 0;
    SlotSet omega;
    int vertex = 0;
    std::int32_t parent = -1; // arena index, -1 for the source label
};

// a dominates b (same vertex) iff a costs no more and its omega covers b's.
// Equal (cost, omega) counts as domination so duplicate labels collapse.
inline bool dominates(const Label& a, const Label& b)
{
    return a.cost <= b.cost && a.omega.is_superset(b.omega);
}

// Optional search trace for white-box tests: the final label arena (parent
// fields index into labels) and the indices that became permanent, in pop
// order.
struct GenericTrace {
    std::vector<Label> labels;
    std::vector<std::int32_t> permanent;
};

struct GenericOptions {
    // Verification hook: drops the superset half of the domination test,
    // pruning on cost alone as plain Dijkstra would. Breaks optimality on
    // fragmented spectrum; mutation runs use it to prove the oracle and the
    // equivalence harness catch the defect.
    bool cost_only_domination = false;
    GenericTrace* trace = nullptr;
};

// Generic Dijkstra: label-setting search over (cost, omega) with domination
// pruning and modulation-driven constriction per relaxation. The queue pops
// in (cost, vertex id, omega, insertion order), a deterministic total
// order. All minimum-cost labels at dst are collected (they pop
// consecutively, cost being the primary key) and the answer is extracted
// under the shared solver total order: minimal width via the most efficient
// feasible level, first-fit window, then lexicographically smallest path.
SolveResult solve_generic(const Network& net, const Demand& d, const ModulationTable& table,
                          const GenericOptions& opts = {});

// Label stores keyed by vertex, kept as antichains under dominates().
// Exposed for direct testing; solve_generic uses one internally.
class LabelStore {
public:
    explicit LabelStore(int vertex_count) : by_vertex_(vertex_count) {}

    // Rejects cand (returns false) if any stored label at its vertex
    // dominates it; otherwise stores it and drops every stored label it
    // dominates. arena is the label pool the stored indices point into.
    bool insert_pruned(std::vector<Label>& arena, std::vector<char>& alive, std::int32_t cand);

    const std::vector<std::int32_t>& at(int vertex) const { return by_vertex_[vertex]; }

    bool cost_only_domination = false;

private:
    std::vector<std::vector<std::int32_t>> by_vertex_;
};

} // namespace eonsp

#endif
