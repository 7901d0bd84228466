#ifndef EONSP_SOLVER_HPP
#define EONSP_SOLVER_HPP

#include <optional>
#include <vector>

#include "eonsp/modulation.hpp"
#include "eonsp/network.hpp"
#include "eonsp/slot_set.hpp"

namespace eonsp {

struct Demand {
    int src = 0;
    int dst = 0;
    int units = 1; // expressed at the least efficient modulation
};

// Accepted solver result. Blocked demands are represented by an empty
// optional at the call sites, not by a sentinel value here.
struct Assignment {
    std::vector<int> path; // src..dst
    double cost = 0;
    int level = 1;
    Window window;

    bool operator==(const Assignment&) const = default;
};

// Both solvers return the best feasible assignment under one shared total
// order so that their results can be compared verbatim:
//   (1) minimal cost, (2) minimal window width, (3) minimal window start,
//   (4) lexicographically smallest path vertex sequence.
// Rule (4) can only fire between distinct equal-cost paths, i.e. on exact
// floating-point cost ties.
using SolveResult = std::optional<Assignment>;

} // namespace eonsp

#endif
