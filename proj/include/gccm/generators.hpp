#pragma once

// Test and benchmark graph constructions: the greedy counterexample family,
// seeded random connected graphs, and the usual named shapes.

#include <gccm/graph.hpp>

#include <cstdint>

namespace gccm {

/// Vertex ids of the distinguished vertices in a counterexample graph.
struct Landmarks {
    Vertex center = 0;
    std::vector<Vertex> endpoints; // e_1 .. e_k, each carrying r^2 leaves
};

/// Center vertex with k arms; each arm is a path of r-1 vertices whose far
/// end e_i holds r^2 leaves. For k=2 this is the odd path of 2r-1 vertices
/// with leaf clusters on both ends. Greedy's first pick is the center, which
/// strands a whole leaf cluster at distance r and ruins the ratio.
std::pair<Graph, Landmarks> gen_counterexample(std::uint32_t r, std::uint32_t k);

/// G(n, p) conditioned on connectivity: resamples up to a retry cap, then
/// falls back to planting a random spanning tree below the sampled edges.
Graph gen_random_connected(std::size_t n, double edgeProbability, std::uint64_t seed);

enum class NamedKind { path, star, cycle, complete, grid };

/// path(n), star(leaves), cycle(n), complete(n), grid(rows, cols).
Graph gen_named(NamedKind kind, std::size_t a, std::size_t b = 0);

} // namespace gccm
