#include "eonsp/network.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>

#include "eonsp/errors.hpp"

namespace eonsp {

namespace {

double euclidean(const Network::Vertex& a, const Network::Vertex& b)
{
    return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y));
}

} // namespace

Network::Network(std::vector<Vertex> vertices, std::vector<std::pair<int, int>> edge_pairs)
    : vertices_(std::move(vertices))
{
    adjacency_.resize(vertices_.size());
    for (auto [u, v] : edge_pairs) {
        if (u == v)
            throw ParseError("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
            throw ParseError("edge endpoint out of range: " + std::to_string(u) + " "
                             + std::to_string(v));
        if (edge_between(u, v))
            throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        const int id = edge_count();
        edges_.push_back({u, v, euclidean(vertices_[u], vertices_[v])});
        adjacency_[u].push_back({v, id});
        adjacency_[v].push_back({u, id});
    }
    for (auto& adj : adjacency_)
        std::sort(adj.begin(), adj.end(),
                  [](const Adjacency& a, const Adjacency& b) { return a.to < b.to; });
}

std::optional<int> Network::edge_between(int u, int v) const
{
    for (const Adjacency& a : adjacency_[u])
        if (a.to == v)
            return a.edge;
    return std::nullopt;
}

void Network::attach_units(int units)
{
    if (units < 1)
        throw ConfigError("units per edge must be positive");
    units_ = units;
    availability_.assign(edges_.size(), SlotSet::full(units));
}

void Network::allocate(int edge, const Window& w)
{
    availability_[edge] = availability_[edge].subtract(w);
}

bool Network::connected() const
{
    if (vertices_.empty())
        return true;
    std::vector<char> seen(vertices_.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (const Adjacency& a : adjacency_[v])
            if (!seen[a.to]) {
                seen[a.to] = 1;
                ++reached;
                stack.push_back(a.to);
            }
    }
    return reached == vertex_count();
}

std::vector<double> Network::shortest_distances(int src) const
{
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(vertices_.size(), inf);
    std::vector<char> settled(vertices_.size(), 0);
    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    dist[src] = 0;
    queue.push({0.0, src});
    while (!queue.empty()) {
        auto [d, v] = queue.top();
        queue.pop();
        if (settled[v])
            continue;
        settled[v] = 1;
        for (const Adjacency& a : adjacency_[v]) {
            const double cand = d + edges_[a.edge].length;
            if (cand < dist[a.to]) {
                dist[a.to] = cand;
                queue.push({cand, a.to});
            }
        }
    }
    return dist;
}

double longest_shortest_path(const Network& net)
{
    double longest = 0;
    for (int src = 0; src < net.vertex_count(); ++src) {
        const auto dist = net.shortest_distances(src);
        for (int v = 0; v < net.vertex_count(); ++v) {
            if (std::isinf(dist[v]))
                throw Disconnected("no path between " + std::to_string(src) + " and "
                                   + std::to_string(v));
            longest = std::max(longest, dist[v]);
        }
    }
    return longest;
}

void save_topology(const Network& net, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot open " + path + " for writing");
    char line[128];
    std::snprintf(line, sizeof line, "gabriel v=%d seed=%llu\n", net.vertex_count(),
                  static_cast<unsigned long long>(net.seed));
    out << line;
    for (int i = 0; i < net.vertex_count(); ++i) {
        std::snprintf(line, sizeof line, "node %d %.17g %.17g\n", i, net.vertices()[i].x,
                      net.vertices()[i].y);
        out << line;
    }
    for (const Network::Edge& e : net.edges()) {
        std::snprintf(line, sizeof line, "edge %d %d\n", e.u, e.v);
        out << line;
    }
    if (!out.flush())
        throw ParseError("write failed: " + path);
}

Network load_topology(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);

    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& what) {
        throw ParseError(path + ":" + std::to_string(lineno) + ": " + what);
    };

    if (!std::getline(in, line))
        fail("empty file");
    ++lineno;
    int n = 0;
    unsigned long long seed = 0;
    if (std::sscanf(line.c_str(), "gabriel v=%d seed=%llu", &n, &seed) != 2)
        fail("bad header, expected 'gabriel v=<n> seed=<seed>'");
    if (n < 1)
        fail("vertex count must be positive");

    std::vector<Network::Vertex> vertices(n);
    std::vector<char> seen(n, 0);
    std::vector<std::pair<int, int>> edges;
    std::vector<double> stated_lengths;

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        std::istringstream fields(line);
        std::string kind;
        fields >> kind;
        if (kind == "node") {
            int id;
            double x, y;
            if (!(fields >> id >> x >> y))
                fail("bad node line");
            if (id < 0 || id >= n)
                fail("node id out of range");
            if (seen[id])
                fail("duplicate node " + std::to_string(id));
            seen[id] = 1;
            vertices[id] = {x, y};
        } else if (kind == "edge") {
            int u, v;
            if (!(fields >> u >> v))
                fail("bad edge line");
            double stated = -1;
            fields >> stated;
            edges.emplace_back(u, v);
            stated_lengths.push_back(stated);
        } else {
            fail("unknown record '" + kind + "'");
        }
    }
    for (int i = 0; i < n; ++i)
        if (!seen[i])
            throw ParseError(path + ": missing node " + std::to_string(i));

    Network net(std::move(vertices), std::move(edges));
    for (std::size_t i = 0; i < stated_lengths.size(); ++i) {
        const double stated = stated_lengths[i];
        if (stated < 0)
            continue; // length field absent
        const double actual = net.edges()[i].length;
        if (std::abs(stated - actual) > 1e-9 * std::max(1.0, std::abs(actual)))
            throw ParseError(path + ": edge " + std::to_string(net.edges()[i].u) + " "
                             + std::to_string(net.edges()[i].v)
                             + ": stated length disagrees with coordinates");
    }
    net.seed = seed;
    return net;
}

} // namespace eonsp
