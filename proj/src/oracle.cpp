#include "eonsp/oracle.hpp"

#include <algorithm>

namespace eonsp::oracle {

namespace bits {

    std::uint64_t constrict(std::uint64_t set, int min_width)
    {
        std::uint64_t out = 0;
        int run_start = -1;
        for (int i = 0; i <= 64; ++i) {
            const bool on = i < 64 && (set >> i) & 1;
            if (on && run_start < 0)
                run_start = i;
            if (!on && run_start >= 0) {
                if (i - run_start >= min_width)
                    out |= window_mask(run_start, i - run_start);
                run_start = -1;
            }
        }
        return out;
    }

    std::optional<int> first_fit(std::uint64_t set, int units, int width)
    {
        for (int s = 0; s + width <= units; ++s)
            if (contains_window(set, s, width))
                return s;
        return std::nullopt;
    }

    std::optional<int> last_fit(std::uint64_t set, int units, int width)
    {
        for (int s = units - width; s >= 0; --s)
            if (contains_window(set, s, width))
                return s;
        return std::nullopt;
    }

    std::vector<std::pair<int, int>> runs(std::uint64_t set, int units)
    {
        std::vector<std::pair<int, int>> out;
        int run_start = -1;
        for (int i = 0; i <= units; ++i) {
            const bool on = i < units && (set >> i) & 1;
            if (on && run_start < 0)
                run_start = i;
            if (!on && run_start >= 0) {
                out.emplace_back(run_start, i);
                run_start = -1;
            }
        }
        return out;
    }

} // namespace bits

namespace {

struct BestCandidate {
    bool found = false;
    double cost = 0;
    int width = 0;
    int start = 0;
    std::vector<int> path;

    void offer(double c, int w, int s, const std::vector<int>& p)
    {
        bool better;
        if (!found)
            better = true;
        else if (c != cost)
            better = c < cost;
        else if (w != width)
            better = w < width;
        else if (s != start)
            better = s < start;
        else
            better = std::lexicographical_compare(p.begin(), p.end(), path.begin(), path.end());
        if (better) {
            found = true;
            cost = c;
            width = w;
            start = s;
            path = p;
        }
    }
};

void enumerate_paths(const Network& net, const std::vector<std::uint64_t>& avail,
                     const Demand& d, const ModulationTable& table, std::vector<int>& path,
                     std::uint32_t visited, double cost, BestCandidate& best)
{
    const int here = path.back();
    if (here == d.dst) {
        for (int m = 1; m <= table.level_count(); ++m) {
            const auto& lvl = table.level(m);
            if (cost > lvl.reach)
                continue;
            const int width = (d.units + lvl.divisor - 1) / lvl.divisor;
            if (width > net.units())
                continue;
            for (int s = 0; s + width <= net.units(); ++s) {
                bool fits = true;
                for (std::size_t i = 0; i + 1 < path.size() && fits; ++i) {
                    const int e = *net.edge_between(path[i], path[i + 1]);
                    fits = bits::contains_window(avail[e], s, width);
                }
                if (fits)
                    best.offer(cost, width, s, path);
            }
        }
        return;
    }
    for (const Network::Adjacency& a : net.adjacent(here)) {
        if (visited & (1U << a.to))
            continue;
        path.push_back(a.to);
        enumerate_paths(net, avail, d, table, path, visited | (1U << a.to),
                        cost + net.edges()[a.edge].length, best);
        path.pop_back();
    }
}

} // namespace

SolveResult brute_force_solve(const Network& net, const std::vector<std::uint64_t>& avail,
                              const Demand& d, const ModulationTable& table)
{
    BestCandidate best;
    std::vector<int> path{d.src};
    enumerate_paths(net, avail, d, table, path, 1U << d.src, 0.0, best);
    if (!best.found)
        return std::nullopt;
    const int level = *table.best_level(d.units, best.cost);
    return Assignment{best.path, best.cost, level, Window{best.start, best.width}};
}

Instance generate_instance(Rng& rng, int max_vertices, int max_units)
{
    Instance inst;
    const int n = static_cast<int>(rng.next_int(2, max_vertices));
    const int S = static_cast<int>(rng.next_int(4, max_units));

    std::vector<Network::Vertex> points(n);
    inst.lattice = rng.next_int(0, 1) == 0;
    if (inst.lattice) {
        // Lattice placement: repeated coordinates force exact cost ties.
        std::vector<int> cells;
        for (int c = 0; c < 16; ++c)
            cells.push_back(c);
        for (int i = 0; i < n; ++i) {
            const int pick = static_cast<int>(rng.next_int(i, 15));
            std::swap(cells[i], cells[pick]);
            points[i] = {static_cast<double>(cells[i] % 4), static_cast<double>(cells[i] / 4)};
        }
    } else {
        for (auto& p : points)
            p = {rng.next_double(), rng.next_double()};
    }

    // Random spanning tree plus extra edges.
    std::vector<std::pair<int, int>> edges;
    auto has_edge = [&](int u, int v) {
        for (auto [a, b] : edges)
            if ((a == u && b == v) || (a == v && b == u))
                return true;
        return false;
    };
    for (int v = 1; v < n; ++v)
        edges.emplace_back(static_cast<int>(rng.next_int(0, v - 1)), v);
    const int extras = static_cast<int>(rng.next_int(0, n));
    for (int i = 0; i < extras; ++i) {
        const int u = static_cast<int>(rng.next_int(0, n - 1));
        const int v = static_cast<int>(rng.next_int(0, n - 1));
        if (u != v && !has_edge(u, v))
            edges.emplace_back(u, v);
    }

    inst.net = Network(std::move(points), std::move(edges));
    inst.net.attach_units(S);

    // Fragmented availability, biased toward mostly-free edges. The mask is
    // authoritative; the network's slot set mirrors it by allocating the
    // complement runs out of the initially full edge.
    inst.avail_masks.resize(inst.net.edge_count());
    for (int e = 0; e < inst.net.edge_count(); ++e) {
        std::uint64_t mask = bits::full(S);
        const int holes = static_cast<int>(rng.next_int(0, 3));
        for (int h = 0; h < holes; ++h) {
            const int start = static_cast<int>(rng.next_int(0, S - 1));
            const int width = static_cast<int>(rng.next_int(1, std::max(1, S / 3)));
            mask &= ~bits::window_mask(start, std::min(width, S - start));
        }
        inst.avail_masks[e] = mask;
        for (auto [lo, hi] : bits::runs(~mask & bits::full(S), S))
            inst.net.allocate(e, Window{lo, hi - lo});
    }

    inst.demand.src = static_cast<int>(rng.next_int(0, n - 1));
    inst.demand.dst = static_cast<int>(rng.next_int(0, n - 2));
    if (inst.demand.dst >= inst.demand.src)
        ++inst.demand.dst;
    inst.demand.units = static_cast<int>(rng.next_int(1, S + S / 4 + 1));

    double total_length = 0;
    for (const auto& e : inst.net.edges())
        total_length += e.length;
    const int level_count = static_cast<int>(rng.next_int(1, 4));
    std::vector<ModulationTable::Level> levels;
    double reach = (0.2 + rng.next_double()) * std::max(total_length, 1e-6);
    int divisor = static_cast<int>(rng.next_int(1, 2));
    for (int m = 0; m < level_count; ++m) {
        levels.push_back({reach, divisor});
        reach *= 0.3 + 0.6 * rng.next_double();
        divisor += static_cast<int>(rng.next_int(1, 2));
    }
    inst.table = ModulationTable(std::move(levels));
    return inst;
}

} // namespace eonsp::oracle
