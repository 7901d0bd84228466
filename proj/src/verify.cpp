#include "eonsp/verify.hpp"

#include <algorithm>
#include <cstdio>

#include "eonsp/errors.hpp"
#include "eonsp/oracle.hpp"
#include "eonsp/rng.hpp"
#include "eonsp/simulator.hpp"

namespace eonsp {

namespace {

SlotSet set_from_mask(std::uint64_t mask, int units)
{
    std::vector<SlotSet::Interval> ivs;
    for (auto [lo, hi] : oracle::bits::runs(mask, units))
        ivs.push_back({lo, hi});
    return SlotSet{std::move(ivs)};
}

bool matches_mask(const SlotSet& set, std::uint64_t mask, int units)
{
    const auto expected = oracle::bits::runs(mask, units);
    const auto& actual = set.intervals();
    if (actual.size() != expected.size())
        return false;
    for (std::size_t i = 0; i < expected.size(); ++i)
        if (actual[i].lo != expected[i].first || actual[i].hi != expected[i].second)
            return false;
    return true;
}

std::uint64_t random_mask(Rng& rng, int units)
{
    // Mixture of densities so empty, sparse and nearly-full sets all occur.
    const std::uint64_t full = oracle::bits::full(units);
    switch (rng.next_int(0, 3)) {
    case 0: return rng.next_u64() & full;
    case 1: return rng.next_u64() & rng.next_u64() & full;
    case 2: return (rng.next_u64() | rng.next_u64()) & full;
    default: return rng.next_int(0, 1) ? full : 0;
    }
}

} // namespace

PhaseReport verify_spectrum_algebra(long long op_count, std::uint64_t seed)
{
    PhaseReport report;
    report.name = "spectrum-vs-bitset";
    Rng rng(seed);
    char detail[256];

    while (report.checks < op_count) {
        const int S = static_cast<int>(rng.next_int(1, 64));
        const std::uint64_t ma = random_mask(rng, S);
        const std::uint64_t mb = random_mask(rng, S);
        const SlotSet a = set_from_mask(ma, S);
        const SlotSet b = set_from_mask(mb, S);

        auto check = [&](bool ok, const char* op) {
            ++report.checks;
            if (!ok) {
                std::snprintf(detail, sizeof detail,
                              "%s disagrees with bitset oracle: S=%d a=%s b=%s", op, S,
                              a.to_string().c_str(), b.to_string().c_str());
                report.record_mismatch(detail);
            }
        };

        check(matches_mask(a.intersect(b), ma & mb, S), "intersect");
        check(a.is_superset(b) == ((ma & mb) == mb), "is_superset");
        check(a.is_superset(a.intersect(b)), "is_superset(a, a*b)");

        const int width = static_cast<int>(rng.next_int(1, S));
        const int start = static_cast<int>(rng.next_int(0, std::max(0, S - width)));
        check(a.contains_window({start, width})
                  == oracle::bits::contains_window(ma, start, width),
              "contains_window");

        const int min_width = static_cast<int>(rng.next_int(1, S));
        check(matches_mask(a.constrict(min_width), oracle::bits::constrict(ma, min_width), S),
              "constrict");

        const auto fit = a.first_fit(width);
        const auto fit_ref = oracle::bits::first_fit(ma, S, width);
        check(fit.has_value() == fit_ref.has_value()
                  && (!fit || (fit->start == *fit_ref && fit->width == width)),
              "first_fit");

        if (fit) {
            check(matches_mask(a.subtract(*fit),
                               ma & ~oracle::bits::window_mask(fit->start, fit->width), S),
                  "subtract");
        } else if (!a.contains_window({start, width})) {
            bool threw = false;
            try {
                a.subtract({start, width});
            } catch (const WindowNotContained&) {
                threw = true;
            }
            check(threw, "subtract(uncontained) must throw");
        }

        // Canonical form is unique: rebuilding from split pieces of the
        // same units yields the identical value.
        {
            std::vector<SlotSet::Interval> pieces;
            for (auto [lo, hi] : oracle::bits::runs(ma, S)) {
                int cut = lo;
                while (cut < hi) {
                    const int next =
                        std::min<int>(hi, cut + static_cast<int>(rng.next_int(1, 4)));
                    pieces.push_back({cut, next});
                    cut = next;
                }
            }
            for (std::size_t i = pieces.size(); i > 1; --i)
                std::swap(pieces[i - 1], pieces[rng.next_int(0, static_cast<int>(i) - 1)]);
            check(SlotSet{pieces} == a, "canonical rebuild");
        }

        // Partial-order laws on a sampled triple.
        {
            const std::uint64_t mc = random_mask(rng, S);
            const SlotSet c = set_from_mask(mc, S);
            check(a.is_superset(a), "superset reflexive");
            check(!(a.is_superset(b) && b.is_superset(a)) || a == b, "superset antisymmetric");
            check(!(a.is_superset(b) && b.is_superset(c)) || a.is_superset(c),
                  "superset transitive");
        }
    }
    return report;
}

PhaseReport verify_solver_oracle(int instance_count, std::uint64_t seed,
                                 const GenericOptions& generic_opts,
                                 const FilteredOptions& filtered_opts)
{
    PhaseReport report;
    report.name = "solvers-vs-brute-force";
    Rng rng(seed);
    char detail[512];

    for (int i = 0; i < instance_count; ++i) {
        const auto inst = oracle::generate_instance(rng);
        const SolveResult expected =
            oracle::brute_force_solve(inst.net, inst.avail_masks, inst.demand, inst.table);
        const SolveResult filtered =
            solve_filtered(inst.net, inst.demand, inst.table, filtered_opts);
        const SolveResult generic = solve_generic(inst.net, inst.demand, inst.table, generic_opts);
        ++report.checks;

        auto fail = [&](const char* what, const SolveResult& got) {
            std::snprintf(detail, sizeof detail,
                          "instance %d (V=%d S=%d demand %d->%d units=%d): %s\n  oracle:   %s\n"
                          "  got:      %s",
                          i, inst.net.vertex_count(), inst.net.units(), inst.demand.src,
                          inst.demand.dst, inst.demand.units, what,
                          describe_assignment(expected).c_str(),
                          describe_assignment(got).c_str());
            report.record_mismatch(detail);
        };

        if (filtered.has_value() != expected.has_value()
            || (filtered && !(*filtered == *expected))) {
            fail("filtered solver differs from oracle", filtered);
            continue;
        }
        if (generic.has_value() != expected.has_value()) {
            fail("generic solver differs from oracle on outcome", generic);
            continue;
        }
        if (generic) {
            const bool core_equal = generic->cost == expected->cost
                && generic->window == expected->window && generic->level == expected->level;
            if (!core_equal) {
                fail("generic solver differs from oracle on (cost, window, level)", generic);
                continue;
            }
            if (!inst.lattice && generic->path != expected->path) {
                fail("generic solver path differs on a tie-free instance", generic);
                continue;
            }
            // Under exact cost ties the generic path may legally differ;
            // it must still be a valid optimal assignment.
            double cost = 0;
            bool valid = generic->path.front() == inst.demand.src
                && generic->path.back() == inst.demand.dst;
            for (std::size_t k = 0; k + 1 < generic->path.size() && valid; ++k) {
                const auto e = inst.net.edge_between(generic->path[k], generic->path[k + 1]);
                valid = e.has_value()
                    && oracle::bits::contains_window(inst.avail_masks[*e],
                                                     generic->window.start,
                                                     generic->window.width);
                if (valid)
                    cost += inst.net.edges()[*e].length;
            }
            if (!valid || cost != generic->cost)
                fail("generic assignment is not realizable on the instance", generic);
        }
    }
    return report;
}

void EquivalenceReport::merge(const EquivalenceReport& other)
{
    calls += other.calls;
    outcome_mismatches += other.outcome_mismatches;
    cost_mismatches += other.cost_mismatches;
    assignment_mismatches += other.assignment_mismatches;
    if (first_mismatch.empty())
        first_mismatch = other.first_mismatch;
}

EquivalenceReport verify_equivalence(const Network& topology, int units, double fraction,
                                     std::uint64_t seed, double max_utilization,
                                     const GenericOptions& generic_opts,
                                     const FilteredOptions& filtered_opts)
{
    EquivalenceReport report;
    Network net = topology;
    net.attach_units(units);
    const int mean_units = mean_units_for(fraction, units);
    const ModulationTable table =
        ModulationTable::default_table(longest_shortest_path(net), 4, 1.5);

    Rng rng(seed);
    next_demand(rng, net, mean_units); // warm-up draw, mirrors run_simulation

    char detail[512];
    int consecutive_blocked = 0;
    const int block_cap = 1000;
    for (int call_index = 0;; ++call_index) {
        if (utilization(net) >= max_utilization)
            break;
        const Demand demand = next_demand(rng, net, mean_units);
        const SolveResult filtered = solve_filtered(net, demand, table, filtered_opts);
        const SolveResult generic = solve_generic(net, demand, table, generic_opts);
        ++report.calls;

        const bool outcome_ok = filtered.has_value() == generic.has_value();
        const bool cost_ok =
            outcome_ok && (!filtered || filtered->cost == generic->cost);
        const bool assignment_ok = cost_ok && (!filtered || *filtered == *generic);
        if (!outcome_ok)
            ++report.outcome_mismatches;
        else if (!cost_ok)
            ++report.cost_mismatches;
        else if (!assignment_ok)
            ++report.assignment_mismatches;
        if (!assignment_ok && report.first_mismatch.empty()) {
            std::snprintf(detail, sizeof detail,
                          "topology %s units=%d frac=%g seed=%llu call=%d:\n  filtered: %s\n"
                          "  generic:  %s",
                          topology.name.c_str(), units, fraction,
                          static_cast<unsigned long long>(seed), call_index,
                          describe_assignment(filtered).c_str(),
                          describe_assignment(generic).c_str());
            report.first_mismatch = detail;
        }

        const SolveResult& applied = generic ? generic : filtered;
        if (applied) {
            consecutive_blocked = 0;
            for (std::size_t i = 0; i + 1 < applied->path.size(); ++i)
                net.allocate(*net.edge_between(applied->path[i], applied->path[i + 1]),
                             applied->window);
        } else if (++consecutive_blocked >= block_cap) {
            break;
        }
    }
    return report;
}

std::string describe_assignment(const SolveResult& result)
{
    if (!result)
        return "blocked";
    char buf[96];
    std::string out;
    std::snprintf(buf, sizeof buf, "cost=%.17g level=%d window=%d+%d path=", result->cost,
                  result->level, result->window.start, result->window.width);
    out = buf;
    for (std::size_t i = 0; i < result->path.size(); ++i) {
        if (i)
            out += '-';
        out += std::to_string(result->path[i]);
    }
    return out;
}

} // namespace eonsp
