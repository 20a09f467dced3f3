#pragma once

// Search-space reductions: dominated vertices D (ineligible as centers) and
// absorbed vertices A (removed from the model entirely, their distance cost
// folded into the absorber's objective coefficients).

#include <gccm/graph.hpp>

#include <cstdint>

namespace gccm {

struct ReductionResult {
    VertexSet dominated;             // D
    VertexSet absorbed;              // A, subset of D
    std::vector<std::uint32_t> alpha; // per vertex: number of vertices it absorbed
    std::vector<Vertex> rho;          // per vertex: absorber (kInvalidAbsorber if not absorbed)
};

constexpr Vertex kInvalidAbsorber = 0xFFFFFFFFu;

/// Operation counter for the domination pass, bounded by O(m * maxDegree).
struct DominationStats {
    std::uint64_t comparisons = 0;
};

/// Marks vertices whose closed neighborhood is contained in an unmarked
/// neighbor's. Dominator candidates are scanned in increasing id; marking
/// stops once only k candidates would remain, so |V \ D| >= k.
VertexSet compute_dominated(const Graph &g, std::uint32_t k, DominationStats *stats = nullptr);

/// Vertices whose removal disconnects the graph (lowpoint computation).
VertexSet cut_vertices(const Graph &g);

/// Absorption: a degree-1 vertex in D is absorbed by its neighbor; a whole
/// component C of G - u (u a cut vertex) is absorbed by u when C is inside D
/// and every member is dominated by u. Absorbers are never absorbed.
ReductionResult compute_absorbed(const Graph &g, const VertexSet &dominated);

/// compute_dominated followed by compute_absorbed.
ReductionResult reduce_graph(const Graph &g, std::uint32_t k, DominationStats *stats = nullptr);

namespace detail {

// Rule selection, used by the tests that check the degree-1 rule is
// subsumed by the cut-vertex rule for n >= 3.
ReductionResult compute_absorbed_rules(const Graph &g, const VertexSet &dominated, bool degreeOneRule,
                                       bool cutVertexRule);

} // namespace detail
} // namespace gccm
