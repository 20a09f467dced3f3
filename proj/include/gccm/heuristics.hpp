#pragma once

// Greedy construction and the swap-based local search. Greedy supports lazy
// re-evaluation (stale gains upper-bound current gains because farness is
// supermodular) and pruned BFS gain computation; the local search applies
// first-found improving swaps until a fixpoint, which carries the
// 5-approximation on farness.

#include <gccm/graph.hpp>
#include <gccm/reductions.hpp>

#include <cstdint>

namespace gccm {

struct HeuristicSolution {
    VertexSet set;
    std::uint64_t farness = 0;
    std::uint64_t evaluations = 0; // marginal-gain / farness evaluations
    std::uint64_t swaps = 0;       // improving swaps applied
};

struct GreedyOptions {
    bool lazy = true;
    const VertexSet *candidates = nullptr; // default: all vertices
};

/// Adds the vertex with the largest farness reduction k times, ties broken
/// by lowest id. Lazy and plain modes return identical sets.
HeuristicSolution greedy(const Graph &g, std::uint32_t k, const GreedyOptions &opts = {});

/// First-improvement swap search: scans s in ascending id over the solution,
/// o in ascending id over searchSpace minus the solution, applies the first
/// swap with f(S - s + o) < f(S), and restarts until none exists.
HeuristicSolution local_search_swap(const Graph &g, std::uint32_t k, const VertexSet &initial,
                                    const VertexSet &searchSpace);

/// greedy followed by local search. With the reduction restriction enabled
/// the search space is (V \ D) plus greedy's picks; an optimal solution lives
/// in V \ D, so the approximation guarantee is unaffected.
HeuristicSolution approx_pipeline(const Graph &g, std::uint32_t k, const ReductionResult &reduction,
                                  bool restrictToUndominated = true);

} // namespace gccm
