#include <gccm/reductions.hpp>

#include <algorithm>
#include <stdexcept>

namespace gccm {

namespace {

// N[v] subseteq N[u] via a merge over the sorted neighbor lists, treating the
// closed neighborhoods (v itself and u itself included).
bool closed_neighborhood_subset(const Graph &g, Vertex v, Vertex u, std::uint64_t &comparisons) {
    auto nv = g.neighbors(v);
    auto nu = g.neighbors(u);
    std::size_t i = 0, j = 0;
    bool vSeenSelf = false, uSeenSelf = false;
    auto nextOf = [](std::span<const Vertex> list, std::size_t &idx, Vertex self, bool &selfDone) {
        // Yields the closed neighborhood in ascending order.
        Vertex fromList = idx < list.size() ? list[idx] : kUnreachable;
        if (!selfDone && self < fromList) {
            selfDone = true;
            return self;
        }
        ++idx;
        return fromList;
    };
    Vertex a = nextOf(nv, i, v, vSeenSelf);
    Vertex b = nextOf(nu, j, u, uSeenSelf);
    while (a != kUnreachable) {
        ++comparisons;
        if (b == kUnreachable || a < b)
            return false;
        if (a == b) {
            a = nextOf(nv, i, v, vSeenSelf);
            b = nextOf(nu, j, u, uSeenSelf);
        } else {
            b = nextOf(nu, j, u, uSeenSelf);
        }
    }
    return true;
}

} // namespace

VertexSet compute_dominated(const Graph &g, std::uint32_t k, DominationStats *stats) {
    const std::size_t n = g.num_vertices();
    if (k > n)
        throw std::invalid_argument("compute_dominated: k exceeds vertex count");
    std::uint64_t comparisons = 0;
    std::vector<std::uint8_t> marked(n, 0);
    std::size_t survivors = n;

    for (Vertex u = 0; u < n && survivors > k; ++u) {
        if (marked[u])
            continue; // a marked vertex may not dominate
        for (Vertex v : g.neighbors(u)) {
            if (survivors == k)
                break;
            if (marked[v])
                continue;
            ++comparisons;
            if (g.degree(v) > g.degree(u))
                continue;
            if (closed_neighborhood_subset(g, v, u, comparisons)) {
                marked[v] = 1;
                --survivors;
            }
        }
    }
    if (stats)
        stats->comparisons = comparisons;

    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if (marked[v])
            out.push_back(v);
    return VertexSet(std::move(out));
}

VertexSet cut_vertices(const Graph &g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::uint32_t> disc(n, 0), low(n, 0);
    std::vector<Vertex> parent(n, kUnreachable);
    std::vector<std::uint8_t> isCut(n, 0);
    std::uint32_t timer = 1;

    // Iterative DFS; the frame tracks how far the neighbor scan has advanced.
    struct Frame {
        Vertex v;
        std::size_t next;
    };
    std::vector<Frame> stack;
    std::size_t rootChildren = 0;
    const Vertex root = 0;
    if (n == 0)
        return VertexSet{};
    disc[root] = low[root] = timer++;
    stack.push_back({root, 0});
    while (!stack.empty()) {
        Frame &f = stack.back();
        auto nbrs = g.neighbors(f.v);
        if (f.next < nbrs.size()) {
            const Vertex w = nbrs[f.next++];
            if (disc[w] == 0) {
                parent[w] = f.v;
                if (f.v == root)
                    ++rootChildren;
                disc[w] = low[w] = timer++;
                stack.push_back({w, 0});
            } else if (w != parent[f.v]) {
                low[f.v] = std::min(low[f.v], disc[w]);
            }
        } else {
            const Vertex v = f.v;
            stack.pop_back();
            if (!stack.empty()) {
                const Vertex p = stack.back().v;
                low[p] = std::min(low[p], low[v]);
                if (p != root && low[v] >= disc[p])
                    isCut[p] = 1;
            }
        }
    }
    if (rootChildren >= 2)
        isCut[root] = 1;

    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if (isCut[v])
            out.push_back(v);
    return VertexSet(std::move(out));
}

namespace detail {

ReductionResult compute_absorbed_rules(const Graph &g, const VertexSet &dominated, bool degreeOneRule,
                                       bool cutVertexRule) {
    const std::size_t n = g.num_vertices();
    ReductionResult res;
    res.dominated = dominated;
    res.alpha.assign(n, 0);
    res.rho.assign(n, kInvalidAbsorber);
    std::vector<std::uint8_t> inD(n, 0);
    for (Vertex v : dominated)
        inD[v] = 1;
    std::vector<std::uint8_t> absorbed(n, 0);

    auto absorb = [&](Vertex v, Vertex by) {
        absorbed[v] = 1;
        res.rho[v] = by;
        ++res.alpha[by];
    };

    if (degreeOneRule) {
        for (Vertex v : dominated) {
            if (g.degree(v) != 1 || absorbed[v] || res.alpha[v] > 0)
                continue;
            const Vertex u = g.neighbors(v)[0];
            if (absorbed[u])
                continue;
            absorb(v, u);
        }
    }

    if (cutVertexRule && n >= 3) {
        const VertexSet cuts = cut_vertices(g);
        std::vector<std::uint32_t> stamp(n, 0), regionStamp(n, 0);
        std::uint32_t epoch = 0;
        std::uint64_t scratchComparisons = 0;
        std::vector<Vertex> region;
        for (Vertex u : cuts) {
            if (absorbed[u])
                continue;
            ++epoch;
            stamp[u] = epoch; // marks N[u]
            for (Vertex w : g.neighbors(u))
                stamp[w] = epoch;
            // Flood each still-unvisited neighbor within N(u). A component of
            // G - u qualifies only if it never escapes N(u); any member with a
            // neighbor outside N[u] disqualifies the whole region.
            for (Vertex w : g.neighbors(u)) {
                if (regionStamp[w] == epoch || absorbed[w])
                    continue;
                region.clear();
                region.push_back(w);
                regionStamp[w] = epoch;
                bool qualifies = true;
                for (std::size_t head = 0; head < region.size(); ++head) {
                    const Vertex x = region[head];
                    if (!inD[x] || absorbed[x] || res.alpha[x] > 0)
                        qualifies = false;
                    for (Vertex y : g.neighbors(x)) {
                        if (y == u)
                            continue;
                        if (stamp[y] != epoch) {
                            qualifies = false; // component reaches outside N(u)
                            continue;
                        }
                        if (regionStamp[y] != epoch) {
                            regionStamp[y] = epoch;
                            region.push_back(y);
                        }
                    }
                    if (qualifies && !closed_neighborhood_subset(g, x, u, scratchComparisons))
                        qualifies = false;
                }
                if (qualifies)
                    for (Vertex x : region)
                        if (res.rho[x] == kInvalidAbsorber)
                            absorb(x, u);
            }
        }
    }

    std::vector<Vertex> a;
    for (Vertex v = 0; v < n; ++v)
        if (absorbed[v])
            a.push_back(v);
    res.absorbed = VertexSet(std::move(a));
    return res;
}

} // namespace detail

ReductionResult compute_absorbed(const Graph &g, const VertexSet &dominated) {
    return detail::compute_absorbed_rules(g, dominated, true, true);
}

ReductionResult reduce_graph(const Graph &g, std::uint32_t k, DominationStats *stats) {
    return compute_absorbed(g, compute_dominated(g, k, stats));
}

} // namespace gccm
