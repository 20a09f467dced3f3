#include <gccm/heuristics.hpp>

#include "pruned_bfs.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace gccm {

HeuristicSolution greedy(const Graph &g, std::uint32_t k, const GreedyOptions &opts) {
    const std::size_t n = g.num_vertices();
    if (k < 1 || k > n)
        throw std::invalid_argument("greedy: k out of range");
    const VertexSet allVertices = VertexSet::full(n);
    const VertexSet &candidates = opts.candidates ? *opts.candidates : allVertices;
    if (candidates.size() < k)
        throw std::invalid_argument("greedy: fewer candidates than k");

    HeuristicSolution result;

    // First pick: the singleton farness minimum, lowest id on ties.
    Vertex best = candidates.members().front();
    std::uint64_t bestFarness = ~std::uint64_t{0};
    for (Vertex c : candidates) {
        const DistanceVector d = bfs(g, c);
        std::uint64_t f = 0;
        for (std::uint32_t x : d)
            f += x;
        ++result.evaluations;
        if (f < bestFarness) {
            bestFarness = f;
            best = c;
        }
    }
    DistanceVector dist = bfs(g, best);
    result.set.insert(best);
    std::uint64_t farness = bestFarness;

    detail::PrunedBfs workspace(n);
    if (opts.lazy) {
        // Stale gains are upper bounds on current gains; pop by
        // (gain desc, id asc) and re-evaluate until the top is fresh.
        struct Entry {
            std::uint64_t gain;
            Vertex v;
            std::uint32_t iteration;
        };
        auto cmp = [](const Entry &a, const Entry &b) {
            if (a.gain != b.gain)
                return a.gain < b.gain;
            return a.v > b.v;
        };
        std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
        if (k >= 2) {
            // These gains are computed after the first pick, so they are
            // already current for the second iteration.
            for (Vertex c : candidates) {
                if (c == best)
                    continue;
                heap.push({workspace.gain(g, dist, c), c, 2});
                ++result.evaluations;
            }
        }

        for (std::uint32_t iter = 2; iter <= k; ++iter) {
            Vertex chosen = kUnreachable;
            std::uint64_t chosenGain = 0;
            while (!heap.empty()) {
                Entry top = heap.top();
                if (top.iteration == iter) {
                    chosen = top.v;
                    chosenGain = top.gain;
                    heap.pop();
                    break;
                }
                heap.pop();
                top.gain = workspace.gain(g, dist, top.v);
                top.iteration = iter;
                ++result.evaluations;
                heap.push(top);
            }
            workspace.apply(g, dist, chosen);
            result.set.insert(chosen);
            farness -= chosenGain;
        }
    } else {
        for (std::uint32_t iter = 2; iter <= k; ++iter) {
            Vertex chosen = kUnreachable;
            std::uint64_t chosenGain = 0;
            for (Vertex c : candidates) {
                if (result.set.contains(c))
                    continue;
                const std::uint64_t gain = workspace.gain(g, dist, c);
                ++result.evaluations;
                if (chosen == kUnreachable || gain > chosenGain) {
                    chosen = c;
                    chosenGain = gain;
                }
            }
            workspace.apply(g, dist, chosen);
            result.set.insert(chosen);
            farness -= chosenGain;
        }
    }

    result.farness = farness;
    return result;
}

HeuristicSolution local_search_swap(const Graph &g, std::uint32_t k, const VertexSet &initial,
                                    const VertexSet &searchSpace) {
    if (initial.size() != k)
        throw std::invalid_argument("local_search_swap: initial solution has wrong size");
    for (Vertex v : initial)
        if (!searchSpace.contains(v))
            throw std::invalid_argument("local_search_swap: initial solution not inside search space");

    HeuristicSolution result;
    result.set = initial;
    result.farness = group_farness(g, initial);
    ++result.evaluations;

    // Each applied swap strictly lowers the integer farness, so this ends.
    bool improved = true;
    while (improved) {
        improved = false;
        for (Vertex s : result.set.members()) {
            for (Vertex o : searchSpace) {
                if (result.set.contains(o))
                    continue;
                VertexSet candidate = result.set;
                candidate.erase(s);
                candidate.insert(o);
                const std::uint64_t f = group_farness(g, candidate);
                ++result.evaluations;
                if (f < result.farness) {
                    result.set = std::move(candidate);
                    result.farness = f;
                    ++result.swaps;
                    improved = true;
                    break;
                }
            }
            if (improved)
                break;
        }
    }
    return result;
}

HeuristicSolution approx_pipeline(const Graph &g, std::uint32_t k, const ReductionResult &reduction,
                                  bool restrictToUndominated) {
    HeuristicSolution start = greedy(g, k);
    VertexSet space = restrictToUndominated
                          ? set_union(complement(reduction.dominated, g.num_vertices()), start.set)
                          : VertexSet::full(g.num_vertices());
    HeuristicSolution refined = local_search_swap(g, k, start.set, space);
    refined.evaluations += start.evaluations;
    return refined;
}

} // namespace gccm
