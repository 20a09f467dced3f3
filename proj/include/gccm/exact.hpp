#pragma once

// Exact combinatorial solvers over k-subsets: plain exhaustive enumeration
// (the oracle) and set-enumeration branch-and-bound. The bound at a node
// subtracts the k' largest marginal gains of the remaining candidates from
// the current farness; supermodularity makes stale gains valid upper bounds,
// so the bound never exceeds the best completion.
//
// Two instantiations share the skeleton: one walks the graph with pruned
// BFS, the other minimizes sum_v min_{s in S} rows[s][v] over row subsets
// (the shape the ILP backend reduces to).

#include <gccm/graph.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>

namespace gccm {

enum class ExactStatus { optimal, timeout };

struct ExactResult {
    VertexSet set;
    std::uint64_t farness = 0;
    ExactStatus status = ExactStatus::optimal;
    std::uint64_t nodes = 0; // explored search-tree nodes
};

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

/// Exhaustive minimum over all k-subsets of `candidates`; returns the
/// lexicographically smallest optimum. Guarded at 1e7 subsets.
ExactResult brute_force(const Graph &g, std::uint32_t k, const VertexSet &candidates);

struct BranchAndBoundOptions {
    Deadline deadline;
    bool candidatePruning = true; // drop children whose optimistic bound cannot beat the incumbent
};

/// Exact optimum via set-enumeration branch-and-bound, children ordered by
/// descending marginal gain, incumbent seeded by greedy plus local search
/// restricted to the candidate set.
ExactResult branch_and_bound(const Graph &g, std::uint32_t k, const VertexSet &candidates,
                             const BranchAndBoundOptions &opts = {});

/// Dense u32 matrix; row s holds the per-item cost of covering with s.
struct RowMatrix {
    std::size_t rows = 0;
    std::size_t width = 0;
    std::vector<std::uint32_t> values;

    std::span<const std::uint32_t> row(std::size_t i) const {
        return {values.data() + i * width, width};
    }
};

struct RowSubsetResult {
    std::vector<std::uint32_t> chosen; // row indices, ascending
    std::uint64_t objective = 0;
    ExactStatus status = ExactStatus::optimal;
    std::uint64_t nodes = 0;
};

/// Exhaustive lexicographic minimum of sum_v min_{s in S} rows[s][v] over
/// k-subsets of rows.
RowSubsetResult enumerate_min_sum(const RowMatrix &m, std::uint32_t k);

/// Branch-and-bound minimum of the same objective.
RowSubsetResult branch_and_bound_min_sum(const RowMatrix &m, std::uint32_t k,
                                         const BranchAndBoundOptions &opts = {});

} // namespace gccm
