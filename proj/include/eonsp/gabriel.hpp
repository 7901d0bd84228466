#ifndef EONSP_GABRIEL_HPP
#define EONSP_GABRIEL_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "eonsp/network.hpp"

namespace eonsp {

// Gabriel edge set over the given points under the closed-disc rule.
std::vector<std::pair<int, int>> gabriel_edges(const std::vector<Network::Vertex>& points);

// Gabriel graph on n points drawn uniformly at random in the unit square
// from Rng(seed). Edge (u,v) exists iff no third point lies inside or on
// the closed disc with diameter uv, i.e. d(u,w)^2 + d(w,v)^2 > d(u,v)^2
// for every other w. Throws DegenerateInput for n < 2 and Disconnected if
// the sample is disconnected (cannot happen for distinct points -- the
// Gabriel graph contains the Euclidean MST -- but the check stays cheap).
Network generate_gabriel(int n, std::uint64_t seed);

// Retries disconnected samples with seeds seed, seed + 2^32, seed + 2*2^32,
// ... so that retry streams never collide with neighboring base seeds.
Network generate_gabriel_connected(int n, std::uint64_t seed, int max_attempts = 64);

} // namespace eonsp

#endif
