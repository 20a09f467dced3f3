#include <gccm/generators.hpp>
#include <gccm/graph.hpp>

#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace gccm;

namespace {

Graph from_text(const std::string &text, GraphFormat format = GraphFormat::edgelist) {
    std::istringstream in(text);
    return load_graph(in, format);
}

} // namespace

TEST_CASE("edge list loading") {
    const Graph p3 = from_text("0 1\n1 2");
    CHECK(p3.num_vertices() == 3);
    CHECK(p3.num_edges() == 2);

    // duplicates and self loops are dropped
    const Graph p2 = from_text("0 1\n0 1\n1 0\n1 1");
    CHECK(p2.num_vertices() == 2);
    CHECK(p2.num_edges() == 1);

    CHECK_THROWS_WITH_AS(from_text("0 1\n2 3"),
                         "disconnected graph: vertices 0 and 2 are in different components",
                         std::runtime_error);
    CHECK_THROWS_AS(from_text("% only comments\n"), std::runtime_error);

    // labels are remapped in first-appearance order
    const Graph relabeled = from_text("# comment\n7 3\n3 12");
    CHECK(relabeled.num_vertices() == 3);
    CHECK(relabeled.label(0) == 7);
    CHECK(relabeled.label(1) == 3);
    CHECK(relabeled.label(2) == 12);
}

TEST_CASE("metis loading") {
    const Graph p3 = from_text("3 2\n2\n1 3\n2\n", GraphFormat::metis);
    CHECK(p3.num_vertices() == 3);
    CHECK(p3.num_edges() == 2);
    CHECK(p3.degree(1) == 2);
    CHECK_THROWS_AS(from_text("3 5\n2\n1 3\n2\n", GraphFormat::metis), std::runtime_error);
    CHECK_THROWS_AS(from_text("", GraphFormat::metis), std::runtime_error);
}

TEST_CASE("bfs distances") {
    const Graph p4 = gen_named(NamedKind::path, 4);
    CHECK(bfs(p4, 0) == DistanceVector{0, 1, 2, 3});

    const Graph star = gen_named(NamedKind::star, 5);
    CHECK(bfs(star, 0) == DistanceVector{0, 1, 1, 1, 1, 1});

    // against the all-pairs oracle
    std::mt19937_64 seeds(5);
    for (int round = 0; round < 20; ++round) {
        const Graph g = gen_random_connected(14, 0.25, seeds());
        const auto matrix = oracles::floyd_warshall(g);
        for (Vertex s = 0; s < g.num_vertices(); ++s) {
            const DistanceVector d = bfs(g, s);
            for (std::size_t v = 0; v < d.size(); ++v)
                CHECK(d[v] == matrix[s][v]);
        }
    }
}

TEST_CASE("bfs neighbors differ by at most one") {
    const Graph g = gen_random_connected(30, 0.15, 99);
    const DistanceVector d = bfs(g, 3);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        for (Vertex w : g.neighbors(v))
            CHECK(static_cast<std::int64_t>(d[v]) - static_cast<std::int64_t>(d[w]) <= 1);
}

TEST_CASE("dist_to_set") {
    const Graph p5 = gen_named(NamedKind::path, 5);
    CHECK(dist_to_set(p5, VertexSet({0, 4})) == DistanceVector{0, 1, 2, 1, 0});
    CHECK(dist_to_set(p5, VertexSet::full(5)) == DistanceVector{0, 0, 0, 0, 0});
    CHECK_THROWS_AS(dist_to_set(p5, VertexSet{}), std::invalid_argument);

    // equals the entrywise minimum over per-source rows
    std::mt19937_64 seeds(7);
    std::mt19937_64 rng(8);
    for (int round = 0; round < 20; ++round) {
        const Graph g = gen_random_connected(16, 0.2, seeds());
        std::vector<Vertex> members;
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            if (rng() % 3 == 0)
                members.push_back(v);
        if (members.empty())
            members.push_back(static_cast<Vertex>(rng() % g.num_vertices()));
        const VertexSet s(members);
        const DistanceVector combined = dist_to_set(g, s);
        DistanceVector expected(g.num_vertices(), kUnreachable);
        for (Vertex src : s) {
            const DistanceVector row = bfs(g, src);
            for (std::size_t v = 0; v < row.size(); ++v)
                expected[v] = std::min(expected[v], row[v]);
        }
        CHECK(combined == expected);
    }
}

TEST_CASE("group farness and closeness") {
    const Graph p5 = gen_named(NamedKind::path, 5);
    CHECK(group_farness(p5, VertexSet({2})) == 6);
    CHECK(group_farness(p5, VertexSet::full(5)) == 0);

    const Graph star = gen_named(NamedKind::star, 5);
    CHECK(group_farness(star, VertexSet({0})) == 5);

    const Rational starCloseness = group_closeness(star, VertexSet({0}));
    CHECK(starCloseness.num == 5);
    CHECK(starCloseness.den == 5);
    CHECK(starCloseness.equals(Rational{1, 1}));

    // kept as written, not normalized
    CHECK(group_closeness(p5, VertexSet({2})).str() == "4/6");

    CHECK_THROWS_AS(group_closeness(p5, VertexSet::full(5)), std::runtime_error);
    CHECK_THROWS_AS(group_farness(p5, VertexSet{}), std::invalid_argument);
}

TEST_CASE("eccentricities") {
    const Graph p5 = gen_named(NamedKind::path, 5);
    const Eccentricities pe = eccentricities(p5);
    CHECK(pe.ecc == DistanceVector{4, 3, 2, 3, 4});
    CHECK(pe.diameter == 4);

    const Graph star = gen_named(NamedKind::star, 5);
    const Eccentricities se = eccentricities(star);
    CHECK(se.ecc[0] == 1);
    CHECK(se.ecc[1] == 2);
    CHECK(se.diameter == 2);

    std::mt19937_64 seeds(20);
    for (int round = 0; round < 10; ++round) {
        const Graph g = gen_random_connected(15, 0.2, seeds());
        const auto matrix = oracles::floyd_warshall(g);
        const Eccentricities ecc = eccentricities(g);
        for (std::size_t v = 0; v < matrix.size(); ++v) {
            std::uint32_t expected = 0;
            for (std::uint32_t d : matrix[v])
                expected = std::max(expected, d);
            CHECK(ecc.ecc[v] == expected);
        }
    }
}

TEST_CASE("farness is monotone and supermodular") {
    std::mt19937_64 seeds(31);
    std::mt19937_64 rng(32);
    for (int round = 0; round < 30; ++round) {
        const Graph g = gen_random_connected(12, 0.25, seeds());
        const std::size_t n = g.num_vertices();

        // random nested pair A ⊆ B plus an outside element e
        std::vector<Vertex> a, b, outside;
        for (Vertex v = 0; v < n; ++v) {
            const int roll = static_cast<int>(rng() % 4);
            if (roll == 0)
                a.push_back(v);
            if (roll <= 1)
                b.push_back(v);
            if (roll == 3)
                outside.push_back(v);
        }
        if (a.empty() || outside.empty())
            continue;
        const VertexSet setA(a), setB(b);
        CHECK(group_farness(g, setB) <= group_farness(g, setA));

        const Vertex e = outside[rng() % outside.size()];
        VertexSet aPlus = setA, bPlus = setB;
        aPlus.insert(e);
        bPlus.insert(e);
        const auto deltaA = static_cast<std::int64_t>(group_farness(g, aPlus)) -
                            static_cast<std::int64_t>(group_farness(g, setA));
        const auto deltaB = static_cast<std::int64_t>(group_farness(g, bPlus)) -
                            static_cast<std::int64_t>(group_farness(g, setB));
        CHECK(deltaA <= deltaB);

        // dist(v, S) never exceeds ecc(v)
        const Eccentricities ecc = eccentricities(g);
        const DistanceVector d = dist_to_set(g, setA);
        for (std::size_t v = 0; v < n; ++v)
            CHECK(d[v] <= ecc.ecc[v]);
    }
}
