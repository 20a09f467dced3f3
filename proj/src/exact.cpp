#include <gccm/exact.hpp>

#include <gccm/heuristics.hpp>
#include <gccm/kernels.hpp>

#include "pruned_bfs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gccm {

namespace {

constexpr std::uint64_t kSubsetGuard = 10'000'000;

bool subset_count_exceeds(std::size_t n, std::uint32_t k, std::uint64_t limit) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 1; i <= k; ++i) {
        count = count * (n - k + i) / i;
        if (count > limit)
            return true;
    }
    return false;
}

bool past_deadline(const Deadline &deadline) {
    return deadline && std::chrono::steady_clock::now() >= *deadline;
}

} // namespace

ExactResult brute_force(const Graph &g, std::uint32_t k, const VertexSet &candidates) {
    const std::size_t n = g.num_vertices();
    if (k < 1 || candidates.size() < k)
        throw std::invalid_argument("brute_force: need at least k candidates");
    if (subset_count_exceeds(candidates.size(), k, kSubsetGuard))
        throw std::runtime_error("brute_force: subset count exceeds guard");

    // One BFS row per candidate, then fold prefix minima down the
    // combination tree; the innermost step is a min-sum kernel call.
    const auto &cand = candidates.members();
    std::vector<DistanceVector> rows;
    rows.reserve(cand.size());
    for (Vertex c : cand)
        rows.push_back(bfs(g, c));

    std::vector<DistanceVector> prefix(k, DistanceVector(n));
    std::vector<std::size_t> pick(k);
    ExactResult bestResult;
    std::uint64_t best = ~std::uint64_t{0};

    // Depth-first lexicographic enumeration of index combinations.
    auto rec = [&](auto &&self, std::uint32_t depth, std::size_t from) -> void {
        for (std::size_t i = from; i + (k - depth - 1) < cand.size(); ++i) {
            pick[depth] = i;
            if (depth + 1 == k) {
                const std::uint32_t *cur = depth == 0 ? rows[i].data() : prefix[depth - 1].data();
                const std::uint64_t f = kernels::min_sum_u32(cur, rows[i].data(), n);
                ++bestResult.nodes;
                if (f < best) {
                    best = f;
                    std::vector<Vertex> chosen(k);
                    for (std::uint32_t d = 0; d < k; ++d)
                        chosen[d] = cand[pick[d]];
                    bestResult.set = VertexSet(std::move(chosen));
                }
            } else {
                if (depth == 0) {
                    prefix[0] = rows[i];
                } else {
                    prefix[depth] = prefix[depth - 1];
                    kernels::min_inplace_u32(prefix[depth].data(), rows[i].data(), n);
                }
                self(self, depth + 1, i + 1);
            }
        }
    };
    rec(rec, 0, 0);
    bestResult.farness = best;
    return bestResult;
}

namespace {

// Shared branch-and-bound skeleton. The Evaluator supplies marginal gains
// and state push/pop for a chosen candidate.
//
//   std::uint64_t gain(state, candidate)   — f(S) - f(S + candidate)
//   State apply(state, candidate)          — state for S + candidate
//
// Gains shrink as the working set grows, so at a node with k' slots left,
// f(S_T) minus the k' largest gains among the candidates underestimates
// every completion in the subtree.
template <class State, class Evaluator>
struct SubsetSearch {
    const Evaluator &eval;
    std::uint32_t k;
    BranchAndBoundOptions opts;
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<std::uint32_t> bestChoice;
    std::vector<std::uint32_t> working;
    std::uint64_t nodes = 0;
    bool timedOut = false;

    SubsetSearch(const Evaluator &eval, std::uint32_t k, const BranchAndBoundOptions &opts)
        : eval(eval), k(k), opts(opts) {}

    void seedIncumbent(std::uint64_t value, std::vector<std::uint32_t> choice) {
        best = value;
        bestChoice = std::move(choice);
    }

    void run(const State &root, std::uint64_t rootValue, std::span<const std::uint32_t> candidates) {
        std::vector<std::uint32_t> cand(candidates.begin(), candidates.end());
        expand(root, rootValue, cand);
    }

    void expand(const State &state, std::uint64_t value, const std::vector<std::uint32_t> &candidates) {
        if (timedOut)
            return;
        ++nodes;
        if (opts.deadline && past_deadline(opts.deadline)) {
            timedOut = true;
            return;
        }
        const std::uint32_t slots = k - static_cast<std::uint32_t>(working.size());
        if (slots == 0) {
            if (value < best) {
                best = value;
                bestChoice = working;
            }
            return;
        }

        struct Scored {
            std::uint64_t gain;
            std::uint32_t candidate;
        };
        std::vector<Scored> scored;
        scored.reserve(candidates.size());
        for (std::uint32_t c : candidates)
            scored.push_back({eval.gain(state, c), c});
        std::sort(scored.begin(), scored.end(), [](const Scored &a, const Scored &b) {
            if (a.gain != b.gain)
                return a.gain > b.gain;
            return a.candidate < b.candidate;
        });
        if (scored.size() < slots)
            return;

        // Node bound: value minus the `slots` largest gains.
        std::uint64_t topSum = 0;
        for (std::uint32_t i = 0; i < slots; ++i)
            topSum += scored[i].gain;
        if (best != ~std::uint64_t{0} && value >= topSum && value - topSum >= best)
            return;

        std::vector<std::uint32_t> childCandidates;
        for (std::size_t i = 0; i < scored.size(); ++i) {
            if (scored.size() - i < slots)
                break; // not enough candidates left to fill the set
            if (opts.candidatePruning && best != ~std::uint64_t{0} && slots >= 1) {
                // Optimistic bound for completions through this child: its own
                // gain plus the slots-1 next-largest gains among the others.
                std::uint64_t childTop = scored[i].gain;
                std::uint32_t taken = 1;
                for (std::size_t j = 0; j < scored.size() && taken < slots; ++j) {
                    if (j == i)
                        continue;
                    childTop += scored[j].gain;
                    ++taken;
                }
                if (value >= childTop && value - childTop >= best)
                    continue;
            }
            const std::uint32_t c = scored[i].candidate;
            working.push_back(c);
            State child = eval.apply(state, c);
            std::vector<std::uint32_t> rest;
            rest.reserve(scored.size() - i - 1);
            for (std::size_t j = i + 1; j < scored.size(); ++j)
                rest.push_back(scored[j].candidate);
            expand(child, value - scored[i].gain, rest);
            working.pop_back();
            if (timedOut)
                return;
        }
    }
};

struct GraphEvaluator {
    const Graph &g;
    const std::vector<Vertex> &cand;
    mutable detail::PrunedBfs workspace;

    GraphEvaluator(const Graph &g, const std::vector<Vertex> &cand)
        : g(g), cand(cand), workspace(g.num_vertices()) {}

    std::uint64_t gain(const DistanceVector &dist, std::uint32_t c) const {
        return workspace.gain(g, dist, cand[c]);
    }
    DistanceVector apply(const DistanceVector &dist, std::uint32_t c) const {
        DistanceVector next = dist;
        workspace.apply(g, next, cand[c]);
        return next;
    }
};

struct RowEvaluator {
    const RowMatrix &m;

    std::uint64_t gain(const std::pair<DistanceVector, std::uint64_t> &state, std::uint32_t c) const {
        const auto row = m.row(c);
        return state.second - kernels::min_sum_u32(state.first.data(), row.data(), m.width);
    }
    std::pair<DistanceVector, std::uint64_t> apply(const std::pair<DistanceVector, std::uint64_t> &state,
                                                   std::uint32_t c) const {
        auto next = state;
        const auto row = m.row(c);
        kernels::min_inplace_u32(next.first.data(), row.data(), m.width);
        next.second = kernels::sum_u32(next.first.data(), m.width);
        return next;
    }
};

} // namespace

ExactResult branch_and_bound(const Graph &g, std::uint32_t k, const VertexSet &candidates,
                             const BranchAndBoundOptions &opts) {
    const std::size_t n = g.num_vertices();
    if (k < 1 || candidates.size() < k)
        throw std::invalid_argument("branch_and_bound: need at least k candidates");

    const auto &cand = candidates.members();
    GraphEvaluator eval(g, cand);
    SubsetSearch<DistanceVector, GraphEvaluator> search(eval, k, opts);

    // Incumbent: greedy over the candidate set refined by swaps inside it.
    {
        GreedyOptions gopts;
        gopts.candidates = &candidates;
        HeuristicSolution seed = local_search_swap(g, k, greedy(g, k, gopts).set, candidates);
        std::vector<std::uint32_t> choice;
        for (Vertex v : seed.set) {
            const auto it = std::lower_bound(cand.begin(), cand.end(), v);
            choice.push_back(static_cast<std::uint32_t>(it - cand.begin()));
        }
        search.seedIncumbent(seed.farness, std::move(choice));
    }

    // Root state: empty set, sentinel distances. Sentinel-based gains order
    // root children by ascending singleton farness, as intended.
    DistanceVector rootDist(n, kUnreachable);
    const std::uint64_t rootValue = static_cast<std::uint64_t>(n) * kUnreachable;
    std::vector<std::uint32_t> indices(cand.size());
    std::iota(indices.begin(), indices.end(), 0);
    search.run(rootDist, rootValue, indices);

    ExactResult result;
    result.nodes = search.nodes;
    result.status = search.timedOut ? ExactStatus::timeout : ExactStatus::optimal;
    std::vector<Vertex> chosen;
    for (std::uint32_t idx : search.bestChoice)
        chosen.push_back(cand[idx]);
    result.set = VertexSet(std::move(chosen));
    result.farness = search.best;
    return result;
}

RowSubsetResult enumerate_min_sum(const RowMatrix &m, std::uint32_t k) {
    if (k < 1 || m.rows < k)
        throw std::invalid_argument("enumerate_min_sum: need at least k rows");
    if (subset_count_exceeds(m.rows, k, kSubsetGuard))
        throw std::runtime_error("enumerate_min_sum: subset count exceeds guard");

    std::vector<DistanceVector> prefix(k, DistanceVector(m.width));
    std::vector<std::uint32_t> pick(k);
    RowSubsetResult result;
    std::uint64_t best = ~std::uint64_t{0};

    auto rec = [&](auto &&self, std::uint32_t depth, std::size_t from) -> void {
        for (std::size_t i = from; i + (k - depth - 1) < m.rows; ++i) {
            pick[depth] = static_cast<std::uint32_t>(i);
            if (depth + 1 == k) {
                const std::uint32_t *cur = depth == 0 ? m.row(i).data() : prefix[depth - 1].data();
                const std::uint64_t f = kernels::min_sum_u32(cur, m.row(i).data(), m.width);
                ++result.nodes;
                if (f < best) {
                    best = f;
                    result.chosen.assign(pick.begin(), pick.end());
                }
            } else {
                if (depth == 0) {
                    std::copy(m.row(i).begin(), m.row(i).end(), prefix[0].begin());
                } else {
                    prefix[depth] = prefix[depth - 1];
                    kernels::min_inplace_u32(prefix[depth].data(), m.row(i).data(), m.width);
                }
                self(self, depth + 1, i + 1);
            }
        }
    };
    rec(rec, 0, 0);
    result.objective = best;
    return result;
}

RowSubsetResult branch_and_bound_min_sum(const RowMatrix &m, std::uint32_t k,
                                         const BranchAndBoundOptions &opts) {
    if (k < 1 || m.rows < k)
        throw std::invalid_argument("branch_and_bound_min_sum: need at least k rows");

    RowEvaluator eval{m};
    SubsetSearch<std::pair<DistanceVector, std::uint64_t>, RowEvaluator> search(eval, k, opts);

    // Greedy incumbent over rows.
    {
        DistanceVector cur(m.width, kUnreachable);
        std::uint64_t value = static_cast<std::uint64_t>(m.width) * kUnreachable;
        std::vector<std::uint32_t> choice;
        std::vector<std::uint8_t> used(m.rows, 0);
        for (std::uint32_t step = 0; step < k; ++step) {
            std::uint32_t bestRow = 0;
            std::uint64_t bestValue = ~std::uint64_t{0};
            for (std::uint32_t r = 0; r < m.rows; ++r) {
                if (used[r])
                    continue;
                const std::uint64_t v = kernels::min_sum_u32(cur.data(), m.row(r).data(), m.width);
                if (v < bestValue) {
                    bestValue = v;
                    bestRow = r;
                }
            }
            used[bestRow] = 1;
            choice.push_back(bestRow);
            kernels::min_inplace_u32(cur.data(), m.row(bestRow).data(), m.width);
            value = bestValue;
        }
        std::sort(choice.begin(), choice.end());
        search.seedIncumbent(value, std::move(choice));
    }

    DistanceVector rootDist(m.width, kUnreachable);
    const std::uint64_t rootValue = static_cast<std::uint64_t>(m.width) * kUnreachable;
    std::vector<std::uint32_t> indices(m.rows);
    std::iota(indices.begin(), indices.end(), 0);
    search.run({rootDist, rootValue}, rootValue, indices);

    RowSubsetResult result;
    result.nodes = search.nodes;
    result.status = search.timedOut ? ExactStatus::timeout : ExactStatus::optimal;
    result.chosen = search.bestChoice;
    std::sort(result.chosen.begin(), result.chosen.end());
    result.objective = search.best;
    return result;
}

} // namespace gccm
