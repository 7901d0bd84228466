#include "eonsp/gabriel.hpp"

#include <string>
#include <utility>
#include <vector>

#include "eonsp/errors.hpp"
#include "eonsp/rng.hpp"

namespace eonsp {

std::vector<std::pair<int, int>> gabriel_edges(const std::vector<Network::Vertex>& points)
{
    const int n = static_cast<int>(points.size());
    auto sq_dist = [&](int a, int b) {
        const double dx = points[a].x - points[b].x;
        const double dy = points[a].y - points[b].y;
        return dx * dx + dy * dy;
    };

    // Closed-disc rule: a point exactly on the diametral circle blocks the
    // edge (measure-zero event under continuous sampling).
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const double duv = sq_dist(u, v);
            bool open = true;
            for (int w = 0; w < n && open; ++w) {
                if (w == u || w == v)
                    continue;
                if (sq_dist(u, w) + sq_dist(w, v) <= duv)
                    open = false;
            }
            if (open)
                edges.emplace_back(u, v);
        }
    }
    return edges;
}

Network generate_gabriel(int n, std::uint64_t seed)
{
    if (n < 2)
        throw DegenerateInput("Gabriel graph needs at least 2 vertices, got " + std::to_string(n));

    Rng rng(seed);
    std::vector<Network::Vertex> points(n);
    for (auto& p : points) {
        p.x = rng.next_double();
        p.y = rng.next_double();
    }

    std::vector<std::pair<int, int>> edges = gabriel_edges(points);
    Network net(std::move(points), std::move(edges));
    net.seed = seed;
    net.name = "g" + std::to_string(n);
    if (!net.connected())
        throw Disconnected("Gabriel sample for seed " + std::to_string(seed)
                           + " is disconnected");
    return net;
}

Network generate_gabriel_connected(int n, std::uint64_t seed, int max_attempts)
{
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        try {
            return generate_gabriel(n, seed + (static_cast<std::uint64_t>(attempt) << 32));
        } catch (const Disconnected&) {
            continue;
        }
    }
    throw Disconnected("no connected Gabriel sample after " + std::to_string(max_attempts)
                       + " attempts from seed " + std::to_string(seed));
}

} // namespace eonsp
