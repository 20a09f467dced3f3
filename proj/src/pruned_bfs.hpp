#pragma once

// Internal: pruned BFS against a distance-to-set vector. Expansion stops at
// vertices the current set already reaches at least as fast; the improving
// region is connected, so the traversal is exact. Distances may carry the
// kUnreachable sentinel (empty set); arithmetic stays in 64 bits.

#include <gccm/graph.hpp>

#include <cstdint>
#include <vector>

namespace gccm::detail {

struct PrunedBfs {
    explicit PrunedBfs(std::size_t n) : seen(n, 0), levels(n, 0) { queue.reserve(n); }

    /// Farness reduction obtained by adding `c` on top of distances `dist`.
    std::uint64_t gain(const Graph &g, const DistanceVector &dist, Vertex c) {
        if (dist[c] == 0)
            return 0;
        ++epoch;
        queue.clear();
        queue.push_back(c);
        seen[c] = epoch;
        levels[c] = 0;
        std::uint64_t total = dist[c];
        std::size_t head = 0;
        while (head < queue.size()) {
            const Vertex u = queue[head++];
            const std::uint32_t nd = levels[u] + 1;
            for (Vertex w : g.neighbors(u)) {
                if (seen[w] == epoch || nd >= dist[w])
                    continue;
                seen[w] = epoch;
                levels[w] = nd;
                total += dist[w] - nd;
                queue.push_back(w);
            }
        }
        return total;
    }

    /// Same traversal, but writes the improved distances back.
    void apply(const Graph &g, DistanceVector &dist, Vertex c) {
        if (dist[c] == 0)
            return;
        ++epoch;
        queue.clear();
        queue.push_back(c);
        seen[c] = epoch;
        levels[c] = 0;
        dist[c] = 0;
        std::size_t head = 0;
        while (head < queue.size()) {
            const Vertex u = queue[head++];
            const std::uint32_t nd = levels[u] + 1;
            for (Vertex w : g.neighbors(u)) {
                if (seen[w] == epoch || nd >= dist[w])
                    continue;
                seen[w] = epoch;
                levels[w] = nd;
                dist[w] = nd;
                queue.push_back(w);
            }
        }
    }

    std::vector<std::uint32_t> seen;
    std::vector<std::uint32_t> levels;
    std::vector<Vertex> queue;
    std::uint32_t epoch = 0;
};

} // namespace gccm::detail
