#ifndef EONSP_VERIFY_HPP
#define EONSP_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "eonsp/network.hpp"
#include "eonsp/solver_filtered.hpp"
#include "eonsp/solver_generic.hpp"

namespace eonsp {

struct PhaseReport {
    std::string name;
    long long checks = 0;
    long long mismatches = 0;
    std::string first_mismatch;

    bool passed() const { return mismatches == 0; }
    void record_mismatch(const std::string& detail)
    {
        if (mismatches++ == 0)
            first_mismatch = detail;
    }
};

// Phase (a): interval algebra against the per-unit bitset reference, plus
// canonical-form and partial-order law checks. One comparison = one check.
PhaseReport verify_spectrum_algebra(long long op_count, std::uint64_t seed);

// Phase (b): both solvers against the exhaustive (path, level, window)
// search on randomized small instances. The filtered solver must reproduce
// the oracle assignment verbatim; the generic solver must reproduce its
// (outcome, cost, width, start, level) always, and the full path whenever
// the instance has continuous coordinates (exact cost ties impossible).
PhaseReport verify_solver_oracle(int instance_count, std::uint64_t seed,
                                 const GenericOptions& generic_opts = {},
                                 const FilteredOptions& filtered_opts = {});

// Phase (c): cross-solver agreement on every call of one simulated load
// ramp (identical network state per call, generic's assignment applied).
// Counts cost and full-assignment mismatches separately so policy drift
// (same cost, different window) is distinguishable from optimality bugs.
struct EquivalenceReport {
    long long calls = 0;
    long long outcome_mismatches = 0;
    long long cost_mismatches = 0;
    long long assignment_mismatches = 0;
    std::string first_mismatch;

    bool passed() const
    {
        return outcome_mismatches == 0 && cost_mismatches == 0 && assignment_mismatches == 0;
    }
    void merge(const EquivalenceReport& other);
};

EquivalenceReport verify_equivalence(const Network& topology, int units, double fraction,
                                     std::uint64_t seed, double max_utilization = 0.6,
                                     const GenericOptions& generic_opts = {},
                                     const FilteredOptions& filtered_opts = {});

std::string describe_assignment(const SolveResult& result);

} // namespace eonsp

#endif
