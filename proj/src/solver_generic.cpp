#include "eonsp/solver_generic.hpp"

#include <algorithm>
#include <cassert>

namespace eonsp {

namespace {

std::vector<int> chain_to_path(const std::vector<Label>& arena, std::int32_t leaf)
{
    std::vector<int> path;
    for (std::int32_t cur = leaf; cur != -1; cur = arena[cur].parent)
        path.push_back(arena[cur].vertex);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

bool LabelStore::insert_pruned(std::vector<Label>& arena, std::vector<char>& alive,
                               std::int32_t cand)
{
    auto& stored = by_vertex_[arena[cand].vertex];
    auto beats = [&](const Label& a, const Label& b) {
        return cost_only_domination ? a.cost <= b.cost : dominates(a, b);
    };
    for (std::int32_t idx : stored)
        if (alive[idx] && beats(arena[idx], arena[cand]))
            return false;
    std::erase_if(stored, [&](std::int32_t idx) {
        if (alive[idx] && beats(arena[cand], arena[idx]))
            alive[idx] = 0;
        return !alive[idx];
    });
    stored.push_back(cand);
    return true;
}

SolveResult solve_generic(const Network& net, const Demand& d, const ModulationTable& table,
                          const GenericOptions& opts)
{
    const int S = net.units();

    const auto req0 = table.requirement(d.units, 0.0);
    SlotSet omega0 = SlotSet::full(S).constrict(req0 ? req0->width : S + 1);
    if (!req0 || omega0.empty())
        return std::nullopt;

    std::vector<Label> arena;
    std::vector<char> alive;
    auto make_label = [&](double cost, SlotSet omega, int vertex, std::int32_t parent) {
        arena.push_back({cost, std::move(omega), vertex, parent});
        alive.push_back(1);
        return static_cast<std::int32_t>(arena.size() - 1);
    };

    LabelStore store(net.vertex_count());
    store.cost_only_domination = opts.cost_only_domination;

    // Min-heap over (cost, vertex, omega, arena index); the index makes the
    // order strict even between equal labels left behind by lazy deletion.
    auto later = [&](std::int32_t a, std::int32_t b) {
        const Label& la = arena[a];
        const Label& lb = arena[b];
        if (la.cost != lb.cost)
            return la.cost > lb.cost;
        if (la.vertex != lb.vertex)
            return la.vertex > lb.vertex;
        if (la.omega != lb.omega)
            return lb.omega < la.omega;
        return a > b;
    };
    std::vector<std::int32_t> heap;
    auto push = [&](std::int32_t idx) {
        heap.push_back(idx);
        std::push_heap(heap.begin(), heap.end(), later);
    };
    auto pop = [&] {
        std::pop_heap(heap.begin(), heap.end(), later);
        const std::int32_t idx = heap.back();
        heap.pop_back();
        return idx;
    };

    {
        const std::int32_t root = make_label(0.0, std::move(omega0), d.src, -1);
        store.insert_pruned(arena, alive, root);
        push(root);
    }

    std::vector<std::int32_t> goals;
    double goal_cost = 0;

    while (!heap.empty()) {
        const std::int32_t current = pop();
        if (!alive[current])
            continue; // invalidated by a dominating insert
        const double cost = arena[current].cost;

        if (!goals.empty() && cost > goal_cost)
            break;
        if (opts.trace)
            opts.trace->permanent.push_back(current);

        if (arena[current].vertex == d.dst) {
            // Equal-cost dst labels pop consecutively under the queue
            // order; collect them all so width/start/path selection below
            // sees every undominated minimum-cost candidate.
            goals.push_back(current);
            goal_cost = cost;
            continue;
        }

        for (const Network::Adjacency& a : net.adjacent(arena[current].vertex)) {
            const double next_cost = cost + net.edges()[a.edge].length;
            const auto req = table.requirement(d.units, next_cost);
            if (!req)
                continue;
            SlotSet omega =
                arena[current].omega.intersect(net.availability(a.edge)).constrict(req->width);
            if (omega.empty())
                continue;
            const std::int32_t cand = make_label(next_cost, std::move(omega), a.to, current);
            if (store.insert_pruned(arena, alive, cand)) {
                push(cand);
            } else {
                // Nothing references a rejected candidate; reclaim its slot.
                arena.pop_back();
                alive.pop_back();
            }
        }
    }

    if (opts.trace)
        opts.trace->labels = arena;

    if (goals.empty())
        return std::nullopt;

    const auto req = table.requirement(d.units, goal_cost);
    assert(req);
    std::int32_t best = -1;
    Window best_window;
    std::vector<int> best_path;
    for (std::int32_t idx : goals) {
        const auto window = arena[idx].omega.first_fit(req->width);
        assert(window); // every omega interval is at least req->width wide
        if (best != -1 && window->start > best_window.start)
            continue;
        auto path = chain_to_path(arena, idx);
        if (best == -1 || window->start < best_window.start
            || std::lexicographical_compare(path.begin(), path.end(), best_path.begin(),
                                            best_path.end())) {
            best = idx;
            best_window = *window;
            best_path = std::move(path);
        }
    }

    return Assignment{std::move(best_path), goal_cost, req->level, best_window};
}

} // namespace eonsp
