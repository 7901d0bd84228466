#include "eonsp/solver_filtered.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <vector>

namespace eonsp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<int> chain_to_path(const std::vector<int>& parent, int src, int v)
{
    std::vector<int> path;
    for (int cur = v; cur != src; cur = parent[cur])
        path.push_back(cur);
    path.push_back(src);
    std::reverse(path.begin(), path.end());
    return path;
}

// Scratch space reused across the many Dijkstra runs of one solve call.
struct DijkstraScratch {
    std::vector<double> dist;
    std::vector<int> parent;
    std::vector<char> settled;
    std::vector<std::pair<double, int>> heap; // (distance, vertex) min-heap

    void reset(int n)
    {
        dist.assign(n, kInf);
        parent.assign(n, -1);
        settled.assign(n, 0);
        heap.clear();
    }
};

bool run_dijkstra(const Network& net, int src, int dst, const Window& window,
                  DijkstraScratch& ws)
{
    ws.reset(net.vertex_count());
    ws.dist[src] = 0;
    ws.heap.push_back({0.0, src});
    auto cmp = std::greater<>{};
    while (!ws.heap.empty()) {
        std::pop_heap(ws.heap.begin(), ws.heap.end(), cmp);
        const auto [d, v] = ws.heap.back();
        ws.heap.pop_back();
        if (ws.settled[v])
            continue;
        ws.settled[v] = 1;
        if (v == dst)
            return true;
        for (const Network::Adjacency& a : net.adjacent(v)) {
            if (ws.settled[a.to])
                continue;
            if (!net.availability(a.edge).contains_window(window))
                continue;
            const double cand = d + net.edges()[a.edge].length;
            if (cand < ws.dist[a.to]) {
                ws.dist[a.to] = cand;
                ws.parent[a.to] = v;
                ws.heap.push_back({cand, a.to});
                std::push_heap(ws.heap.begin(), ws.heap.end(), cmp);
            } else if (cand == ws.dist[a.to] && ws.parent[a.to] != v) {
                // Exact tie: keep the lexicographically smaller path.
                auto via_v = chain_to_path(ws.parent, src, v);
                via_v.push_back(a.to);
                const auto current = chain_to_path(ws.parent, src, a.to);
                if (std::lexicographical_compare(via_v.begin(), via_v.end(), current.begin(),
                                                 current.end()))
                    ws.parent[a.to] = v;
            }
        }
    }
    return false;
}

} // namespace

std::optional<DijkstraResult> dijkstra_inline(const Network& net, int src, int dst,
                                              const Window& window)
{
    DijkstraScratch ws;
    if (!run_dijkstra(net, src, dst, window, ws))
        return std::nullopt;
    return DijkstraResult{ws.dist[dst], chain_to_path(ws.parent, src, dst)};
}

SolveResult solve_filtered(const Network& net, const Demand& d, const ModulationTable& table,
                           const FilteredOptions& opts)
{
    const int S = net.units();

    // Level-major, start-minor enumeration: one filtered run per
    // (modulation level, window start) candidate. Levels with equal window
    // width rerun the same filter; the selection below makes enumeration
    // order irrelevant to the returned assignment.
    std::vector<std::pair<int, double>> widths; // (width, reach) per level
    for (int m = 1; m <= table.level_count(); ++m) {
        const auto& lvl = table.level(m);
        const int w = (d.units + lvl.divisor - 1) / lvl.divisor;
        if (w <= S)
            widths.emplace_back(w, lvl.reach);
    }

    DijkstraScratch ws;
    bool have_best = false;
    double best_cost = 0;
    Window best_window;
    std::vector<int> best_parent;

    for (const auto& [width, reach] : widths) {
        for (int s = 0; s + width <= S; ++s) {
            const Window window{s, width};
            if (!run_dijkstra(net, d.src, d.dst, window, ws))
                continue;
            const double cost = ws.dist[d.dst];
            if (cost > reach)
                continue;
            bool better;
            if (!have_best)
                better = true;
            else if (cost != best_cost)
                better = cost < best_cost;
            else if (width != best_window.width)
                better = width < best_window.width;
            else
                better = opts.last_fit ? s > best_window.start : s < best_window.start;
            if (better) {
                have_best = true;
                best_cost = cost;
                best_window = window;
                best_parent = ws.parent;
            }
        }
    }

    if (!have_best)
        return std::nullopt;

    const auto req = table.requirement(d.units, best_cost);
    assert(req && req->width == best_window.width);
    return Assignment{chain_to_path(best_parent, d.src, d.dst), best_cost, req->level,
                      best_window};
}

} // namespace eonsp
