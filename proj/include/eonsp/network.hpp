#ifndef EONSP_NETWORK_HPP
#define EONSP_NETWORK_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eonsp/slot_set.hpp"

namespace eonsp {

// Undirected simple graph with Euclidean edge lengths and per-edge spectrum
// availability. Vertices and edges are fixed after construction; only the
// availability changes, and only through allocate().
class Network {
public:
    struct Vertex {
        double x = 0;
        double y = 0;
    };

    struct Edge {
        int u = 0;
        int v = 0;
        double length = 0;
    };

    struct Adjacency {
        int to = 0;
        int edge = 0;
    };

    Network() = default;
    Network(std::vector<Vertex> vertices, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    // Neighbors of v, sorted by vertex id.
    const std::vector<Adjacency>& adjacent(int v) const { return adjacency_[v]; }
    std::optional<int> edge_between(int u, int v) const;

    // Units per edge; 0 until attach_units() is called.
    int units() const { return units_; }
    // (Re)initializes every edge to full availability [0, units).
    void attach_units(int units);

    const SlotSet& availability(int edge) const { return availability_[edge]; }
    // Removes the window from the edge's free units.
    void allocate(int edge, const Window& w);

    bool connected() const;

    // Single-source weighted shortest-path distances (Dijkstra).
    std::vector<double> shortest_distances(int src) const;

    // Generation metadata carried through topology files.
    std::uint64_t seed = 0;
    std::string name;

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Adjacency>> adjacency_;
    std::vector<SlotSet> availability_;
    int units_ = 0;
};

// Max over all vertex pairs of the weighted shortest-path distance.
// Throws Disconnected when some pair is unreachable.
double longest_shortest_path(const Network& net);

// Line-oriented topology file: "gabriel v=<n> seed=<seed>" header, "node id
// x y" per vertex with 17 significant digits, "edge u v" per edge. Lengths
// are recomputed from coordinates on load; an optional third edge field is
// validated against that recomputation (1e-9 relative).
void save_topology(const Network& net, const std::string& path);
Network load_topology(const std::string& path);

} // namespace eonsp

#endif
