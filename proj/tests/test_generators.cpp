#include <gccm/generators.hpp>

#include <doctest.h>

using namespace gccm;

TEST_CASE("counterexample family sizes") {
    {
        const auto [g, lm] = gen_counterexample(2, 2);
        CHECK(g.num_vertices() == 11);
        CHECK(g.num_edges() == 10);
        CHECK(lm.endpoints.size() == 2);
        // each endpoint carries r^2 = 4 leaves plus the path edge
        for (Vertex e : lm.endpoints)
            CHECK(g.degree(e) == 5);
    }
    {
        const auto [g, lm] = gen_counterexample(3, 2);
        CHECK(g.num_vertices() == 23);
        CHECK(g.degree(lm.center) == 2);
    }
    {
        const auto [g, lm] = gen_counterexample(2, 3);
        CHECK(g.num_vertices() == 16);
        CHECK(g.degree(lm.center) == 3);
        CHECK(lm.endpoints.size() == 3);
    }
}

TEST_CASE("random connected graphs are deterministic per seed") {
    const Graph a = gen_random_connected(20, 0.2, 7);
    const Graph b = gen_random_connected(20, 0.2, 7);
    REQUIRE(a.num_vertices() == b.num_vertices());
    CHECK(a.num_edges() == b.num_edges());
    for (Vertex v = 0; v < a.num_vertices(); ++v) {
        const auto na = a.neighbors(v);
        const auto nb = b.neighbors(v);
        REQUIRE(na.size() == nb.size());
        for (std::size_t i = 0; i < na.size(); ++i)
            CHECK(na[i] == nb[i]);
    }

    // tiny n has a single connected simple graph
    const Graph p2 = gen_random_connected(2, 0.0, 1);
    CHECK(p2.num_vertices() == 2);
    CHECK(p2.num_edges() == 1);

    // no self loops, construction enforced connectivity
    const Graph g = gen_random_connected(20, 0.2, 7);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        for (Vertex w : g.neighbors(v))
            CHECK(v != w);
}

TEST_CASE("named constructions") {
    CHECK(gen_named(NamedKind::path, 5).num_edges() == 4);
    CHECK(gen_named(NamedKind::star, 5).num_vertices() == 6);
    CHECK(gen_named(NamedKind::cycle, 6).num_edges() == 6);
    CHECK(gen_named(NamedKind::complete, 5).num_edges() == 10);
    const Graph grid = gen_named(NamedKind::grid, 3, 3);
    CHECK(grid.num_vertices() == 9);
    CHECK(grid.num_edges() == 12);
}
