#include <gccm/generators.hpp>
#include <gccm/reductions.hpp>

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace gccm;

namespace {

// Interior path vertex 3 carries a triangle {3,4,5} at the end of 0-1-2-3.
Graph path_with_triangle() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

// Diamond over a diamond; nothing is dominated here.
Graph rigid_example() {
    return Graph::from_edges(
        8, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 7}, {6, 7}});
}

} // namespace

TEST_CASE("dominated vertices") {
    const Graph star = gen_named(NamedKind::star, 5);
    CHECK(compute_dominated(star, 1) == VertexSet({1, 2, 3, 4, 5}));

    // mutual domination in a triangle: the lowest id survives and the
    // surviving singleton is still optimal
    const Graph k3 = gen_named(NamedKind::complete, 3);
    CHECK(compute_dominated(k3, 1) == VertexSet({1, 2}));
    CHECK(group_farness(k3, VertexSet({0})) ==
          oracles::min_farness_subsets(k3, 1, {0, 1, 2}).farness);

    const Graph p4 = gen_named(NamedKind::path, 4);
    CHECK(compute_dominated(p4, 2) == VertexSet({0, 3}));

    // the survivor count never drops below k
    CHECK(compute_dominated(star, 3).size() <= 3);
    for (std::uint32_t k = 1; k <= 3; ++k)
        CHECK(6 - compute_dominated(star, k).size() >= k);
}

TEST_CASE("cut vertices") {
    CHECK(cut_vertices(gen_named(NamedKind::path, 4)) == VertexSet({1, 2}));
    CHECK(cut_vertices(gen_named(NamedKind::complete, 3)) == VertexSet{});
    CHECK(cut_vertices(path_with_triangle()) == VertexSet({1, 2, 3}));

    // brute force: v is a cut vertex iff G - v has more components
    std::mt19937_64 seeds(17);
    for (int round = 0; round < 25; ++round) {
        const Graph g = gen_random_connected(14, 0.18, seeds());
        const VertexSet cuts = cut_vertices(g);
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            CHECK(cuts.contains(v) == (oracles::components_without(g, v) > 1));
    }
}

TEST_CASE("absorbed vertices") {
    const Graph p3 = gen_named(NamedKind::path, 3);
    const ReductionResult p3red = compute_absorbed(p3, compute_dominated(p3, 1));
    CHECK(p3red.absorbed == VertexSet({0, 2}));
    CHECK(p3red.alpha[1] == 2);
    CHECK(p3red.rho[0] == 1);
    CHECK(p3red.rho[2] == 1);

    const Graph star = gen_named(NamedKind::star, 5);
    const ReductionResult starRed = reduce_graph(star, 1);
    CHECK(starRed.absorbed == VertexSet({1, 2, 3, 4, 5}));
    CHECK(starRed.alpha[0] == 5);

    const ReductionResult triangleEnd = reduce_graph(path_with_triangle(), 1);
    CHECK(triangleEnd.dominated == VertexSet({0, 4, 5}));
    CHECK(triangleEnd.absorbed == VertexSet({0, 4, 5}));
    CHECK(triangleEnd.alpha[1] == 1);
    CHECK(triangleEnd.alpha[3] == 2);

    // nothing can be absorbed in the rigid example
    const ReductionResult rigid = reduce_graph(rigid_example(), 1);
    CHECK(rigid.absorbed.empty());

    // single edge: the surviving endpoint absorbs the dominated one
    const Graph p2 = gen_named(NamedKind::path, 2);
    const ReductionResult p2red = reduce_graph(p2, 1);
    CHECK(p2red.dominated == VertexSet({1}));
    CHECK(p2red.absorbed == VertexSet({1}));
    CHECK(p2red.alpha[0] == 1);

    // mutual domination without pendants: dominated but nothing absorbed
    const ReductionResult k3red = reduce_graph(gen_named(NamedKind::complete, 3), 1);
    CHECK(k3red.dominated.size() == 2);
    CHECK(k3red.absorbed.empty());
}

TEST_CASE("reduction safety on random graphs") {
    std::mt19937_64 seeds(23);
    std::mt19937_64 rng(24);
    for (int round = 0; round < 20; ++round) {
        const Graph g = gen_random_connected(8 + round % 10, 0.22, seeds());
        const std::uint32_t k = 2 + round % 2;
        const ReductionResult red = reduce_graph(g, k);

        // optimal farness survives the candidate restriction
        const auto all = VertexSet::full(g.num_vertices()).members();
        const auto restricted = complement(red.dominated, g.num_vertices()).members();
        CHECK(oracles::min_farness_subsets(g, k, restricted).farness ==
              oracles::min_farness_subsets(g, k, all).farness);

        // every absorbed vertex sits exactly one step behind its absorber
        const std::vector<Vertex> pool = restricted;
        for (int sample = 0; sample < 25 && !red.absorbed.empty(); ++sample) {
            std::vector<Vertex> members;
            for (Vertex v : pool)
                if (rng() % 3 == 0)
                    members.push_back(v);
            if (members.empty())
                members.push_back(pool[rng() % pool.size()]);
            const DistanceVector d = dist_to_set(g, VertexSet(members));
            for (Vertex v : red.absorbed)
                CHECK(d[v] == d[red.rho[v]] + 1);
        }

        // alpha counts match rho exactly
        std::vector<std::uint32_t> counted(g.num_vertices(), 0);
        for (Vertex v : red.absorbed) {
            CHECK(!red.absorbed.contains(red.rho[v]));
            bool adjacent = false;
            for (Vertex w : g.neighbors(v))
                adjacent = adjacent || w == red.rho[v];
            CHECK(adjacent);
            ++counted[red.rho[v]];
        }
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            CHECK(counted[v] == red.alpha[v]);

        std::size_t alphaTotal = 0;
        for (auto a : red.alpha)
            alphaTotal += a;
        CHECK(alphaTotal == red.absorbed.size());
    }
}

TEST_CASE("degree-1 rule is subsumed by the cut-vertex rule for n >= 3") {
    std::mt19937_64 seeds(29);
    for (int round = 0; round < 20; ++round) {
        // sparse samples so pendant vertices actually appear
        const Graph g = gen_random_connected(12, 0.12, seeds());
        const VertexSet d = compute_dominated(g, 2);
        const ReductionResult both = detail::compute_absorbed_rules(g, d, true, true);
        const ReductionResult cutOnly = detail::compute_absorbed_rules(g, d, false, true);
        const ReductionResult degreeOnly = detail::compute_absorbed_rules(g, d, true, false);
        CHECK(both.absorbed == cutOnly.absorbed);
        CHECK(both.alpha == cutOnly.alpha);
        for (Vertex v : degreeOnly.absorbed)
            CHECK(cutOnly.absorbed.contains(v));
    }
}

TEST_CASE("domination work stays within the degree budget") {
    std::mt19937_64 seeds(37);
    std::vector<Graph> corpus;
    corpus.push_back(gen_named(NamedKind::star, 40));
    corpus.push_back(gen_named(NamedKind::complete, 25));
    corpus.push_back(gen_named(NamedKind::path, 60));
    corpus.push_back(gen_named(NamedKind::grid, 6, 8));
    for (int round = 0; round < 6; ++round)
        corpus.push_back(gen_random_connected(40, 0.15, seeds()));

    for (const Graph &g : corpus) {
        DominationStats stats;
        compute_dominated(g, 1, &stats);
        const std::uint64_t budget =
            10 * static_cast<std::uint64_t>(g.num_edges()) * g.max_degree();
        CHECK(stats.comparisons <= budget);
    }
}
