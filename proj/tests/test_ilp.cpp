#include <gccm/generators.hpp>
#include <gccm/ilp.hpp>

#include "oracles.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace gccm;

namespace {

std::vector<std::uint32_t> initial_caps(const DistanceVector &ecc) {
    std::vector<std::uint32_t> dMap(ecc.size());
    for (std::size_t v = 0; v < ecc.size(); ++v)
        dMap[v] = std::min(2u, ecc[v]);
    return dMap;
}

// Caps the full model must use so the reduced and full optima coincide: an
// absorbed vertex sits one level above its absorber.
std::vector<std::uint32_t> lifted_caps(const std::vector<std::uint32_t> &dMap,
                                       const ReductionResult &red) {
    std::vector<std::uint32_t> full = dMap;
    for (Vertex v : red.absorbed)
        full[v] = dMap[red.rho[v]] + 1;
    return full;
}

} // namespace

TEST_CASE("full model on the star") {
    const Graph star = gen_named(NamedKind::star, 5);
    const VertexSet dominated({1, 2, 3, 4, 5});
    const Eccentricities ecc = eccentricities(star);
    const IlpModel model = build_full_model(star, 1, initial_caps(ecc.ecc), dominated, &ecc.ecc);
    CHECK(model.variable_count() == 12); // center: levels 0..1, leaves: 1..2
    CHECK(model.centers == std::vector<Vertex>{0});
    const BackendResult result = builtin_backend_solve(model);
    CHECK(result.objective == 5);
    CHECK(result.selected == VertexSet({0}));
}

TEST_CASE("full model basics") {
    const Graph p3 = gen_named(NamedKind::path, 3);
    const Eccentricities ecc = eccentricities(p3);
    {
        const IlpModel model = build_full_model(p3, 1, initial_caps(ecc.ecc), VertexSet({0, 2}), &ecc.ecc);
        CHECK(builtin_backend_solve(model).objective == 2);
    }
    {
        const IlpModel model = build_full_model(p3, 3, initial_caps(ecc.ecc), VertexSet{}, &ecc.ecc);
        CHECK(builtin_backend_solve(model).objective == 0);
    }
    // fewer than k selectable vertices
    CHECK_THROWS_AS(build_full_model(p3, 2, initial_caps(ecc.ecc), VertexSet({0, 2}), &ecc.ecc),
                    std::invalid_argument);
    // caps above the eccentricity are rejected
    std::vector<std::uint32_t> bad = initial_caps(ecc.ecc);
    bad[1] = 5;
    CHECK_THROWS_AS(build_full_model(p3, 1, bad, VertexSet{}, &ecc.ecc), std::invalid_argument);
}

TEST_CASE("reduced objective coefficients") {
    IlpModel model;
    model.kind = ModelKind::reduced;
    model.alpha = {1, 0};
    CHECK(model.cost(0, 3) == 7); // one absorbed neighbor: cost 2i + 1
    CHECK(model.cost(1, 3) == 3); // no absorption: plain level
    model.kind = ModelKind::full;
    CHECK(model.cost(0, 3) == 3);
}

TEST_CASE("reduced model on the star collapses to one row") {
    const Graph star = gen_named(NamedKind::star, 5);
    const ReductionResult red = reduce_graph(star, 1);
    const Eccentricities ecc = eccentricities(star);
    const IlpModel model = build_reduced_model(star, 1, initial_caps(ecc.ecc), red, &ecc.ecc);
    CHECK(model.modeled == std::vector<Vertex>{0});
    CHECK(model.variable_count() == 2);
    const BackendResult result = builtin_backend_solve(model);
    CHECK(result.objective == 5); // alpha(0) = 5, level 0 costs 5*1 + 0
    CHECK(result.selected == VertexSet({0}));
}

TEST_CASE("estimate_d") {
    // dist 0 with room to spare floors at 2
    const Graph p5 = gen_named(NamedKind::path, 5);
    const Eccentricities ecc = eccentricities(p5);
    const std::vector<std::uint32_t> dMap = estimate_d(p5, VertexSet({2}), ecc.ecc);
    CHECK(dMap[2] == 2);         // dist 0 -> max(1, 2) = 2
    CHECK(dMap[1] == 2);         // dist 1 -> max(2, 2) = 2
    CHECK(dMap[0] == 3);         // dist 2 -> 3, ecc 4 does not bind
    const std::vector<std::uint32_t> corner = estimate_d(p5, VertexSet({0}), ecc.ecc);
    CHECK(corner[4] == 4);       // dist 4 -> 5 capped at ecc 4
    CHECK_THROWS_AS(estimate_d(p5, VertexSet{}, ecc.ecc), std::invalid_argument);
}

TEST_CASE("sufficiency check") {
    IlpModel model;
    model.modeled = {5, 6, 7};
    model.levelCap = {3, 3, 3};
    BackendResult result;
    result.levels = {3, 3, 2};
    DistanceVector ecc(8, 0);
    ecc[5] = 7; // capped below eccentricity: flagged
    ecc[6] = 3; // cap equals eccentricity: fine
    ecc[7] = 7; // top level inactive: fine
    CHECK(check_sufficiency(result, model, ecc) == std::vector<Vertex>{5});
}

TEST_CASE("iterative solves on the spec shapes") {
    const Graph star = gen_named(NamedKind::star, 5);
    const SolveOutcome one = solve_iteratively(star, 1, SolveMode::grover);
    CHECK(one.status == SolveStatus::optimal);
    CHECK(one.farness == 5);
    CHECK(one.iterations == 0); // greedy path
    CHECK(one.solution == VertexSet({0}));

    const auto [g2, lm] = gen_counterexample(2, 2);
    const SolveOutcome pair = solve_iteratively(g2, 2, SolveMode::grover);
    CHECK(pair.farness == 9);
    CHECK(pair.solution == VertexSet({lm.endpoints[0], lm.endpoints[1]}));

    const Graph p7 = gen_named(NamedKind::path, 7);
    const SolveOutcome viaGrover = solve_iteratively(p7, 2, SolveMode::grover);
    const SolveOutcome viaIlpind = solve_iteratively(p7, 2, SolveMode::ilpind);
    CHECK(viaGrover.farness == 6);
    CHECK(viaIlpind.farness == 6);
    CHECK(viaGrover.iterations <= viaIlpind.iterations);
}

TEST_CASE("model equivalence against the truncated oracle") {
    std::mt19937_64 seeds(81);
    for (int round = 0; round < 20; ++round) {
        const Graph g = gen_random_connected(9 + round % 8, 0.22, seeds());
        const std::size_t n = g.num_vertices();
        const std::uint32_t k = 2 + round % 2;
        const ReductionResult red = reduce_graph(g, k);
        const Eccentricities ecc = eccentricities(g);
        const HeuristicSolution approx = approx_pipeline(g, k, red);
        const std::vector<std::uint32_t> dMap = estimate_d(g, approx.set, ecc.ecc);
        const std::vector<std::uint32_t> fullCaps = lifted_caps(dMap, red);

        const IlpModel reduced = build_reduced_model(g, k, dMap, red, &ecc.ecc);
        const IlpModel full = build_full_model(g, k, fullCaps, red.dominated, &ecc.ecc);
        const std::int64_t reducedOpt = builtin_backend_solve(reduced).objective;
        const std::int64_t fullOpt = builtin_backend_solve(full).objective;
        CHECK(reducedOpt == fullOpt);

        const std::vector<std::uint64_t> weight(n, 1);
        const std::vector<std::uint64_t> bias(n, 0);
        const std::uint64_t oracle = oracles::min_truncated_cost(
            g, k, complement(red.dominated, n).members(), fullCaps, weight, bias);
        CHECK(static_cast<std::uint64_t>(fullOpt) == oracle);

        // variable accounting for the reduced kind
        std::size_t expectedVars = 0;
        for (Vertex v = 0; v < n; ++v)
            if (!red.absorbed.contains(v))
                expectedVars += dMap[v] + 1;
        std::size_t dominatedNotAbsorbed = 0;
        for (Vertex v : red.dominated)
            if (!red.absorbed.contains(v))
                ++dominatedNotAbsorbed;
        CHECK(reduced.variable_count() == expectedVars - dominatedNotAbsorbed);
    }
}

TEST_CASE("mode agreement and termination on random graphs") {
    std::mt19937_64 seeds(83);
    for (int round = 0; round < 15; ++round) {
        const Graph g = gen_random_connected(9 + round % 10, 0.2, seeds());
        const std::uint32_t k = 2 + round % 3;
        if (k > g.num_vertices())
            continue;
        const SolveOutcome a = solve_iteratively(g, k, SolveMode::grover);
        const SolveOutcome b = solve_iteratively(g, k, SolveMode::ilpind);
        CHECK(a.status == SolveStatus::optimal);
        CHECK(a.farness == b.farness);

        const Eccentricities ecc = eccentricities(g);
        const std::uint64_t eccSum = std::accumulate(ecc.ecc.begin(), ecc.ecc.end(), std::uint64_t{0});
        CHECK(a.iterations <= eccSum + 1);
        CHECK(b.iterations <= eccSum + 1);
    }
}

TEST_CASE("reconstruction lifts reduced optima to full assignments") {
    const Graph star = gen_named(NamedKind::star, 5);
    const ReductionResult red = reduce_graph(star, 1);
    const Eccentricities ecc = eccentricities(star);
    const IlpModel reduced = build_reduced_model(star, 1, initial_caps(ecc.ecc), red, &ecc.ecc);
    const BackendResult result = builtin_backend_solve(reduced);
    const FullAssignment fa = reconstruct_full_assignment(result, reduced, red);
    CHECK(fa.objective == result.objective);
    for (Vertex leaf = 1; leaf <= 5; ++leaf) {
        CHECK(fa.levels[leaf] == 1);
        CHECK(fa.dMap[leaf] == 2);
    }
    std::string reason;
    CHECK(verify_full_assignment(star, red.dominated, 1, fa, result.selected, &reason));

    // no absorption: reconstruction is the identity
    const Graph c5 = gen_named(NamedKind::cycle, 5);
    const ReductionResult c5red = reduce_graph(c5, 2);
    CHECK(c5red.absorbed.empty());
    const Eccentricities c5ecc = eccentricities(c5);
    const IlpModel c5model =
        build_reduced_model(c5, 2, initial_caps(c5ecc.ecc), c5red, &c5ecc.ecc);
    const BackendResult c5result = builtin_backend_solve(c5model);
    const FullAssignment c5fa = reconstruct_full_assignment(c5result, c5model, c5red);
    for (std::size_t mi = 0; mi < c5model.modeled.size(); ++mi)
        CHECK(c5fa.levels[c5model.modeled[mi]] == c5result.levels[mi]);
}

TEST_CASE("reconstruction stays feasible on random instances") {
    std::mt19937_64 seeds(89);
    for (int round = 0; round < 15; ++round) {
        const Graph g = gen_random_connected(10 + round % 8, 0.18, seeds());
        const std::uint32_t k = 2;
        const ReductionResult red = reduce_graph(g, k);
        const Eccentricities ecc = eccentricities(g);
        const HeuristicSolution approx = approx_pipeline(g, k, red);
        const std::vector<std::uint32_t> dMap = estimate_d(g, approx.set, ecc.ecc);
        const IlpModel reduced = build_reduced_model(g, k, dMap, red, &ecc.ecc);
        const BackendResult result = builtin_backend_solve(reduced);
        const FullAssignment fa = reconstruct_full_assignment(result, reduced, red);
        std::string reason;
        CHECK_MESSAGE(verify_full_assignment(g, red.dominated, k, fa, result.selected, &reason),
                      reason);
        CHECK(fa.objective == result.objective);
    }
}

TEST_CASE("pairwise-assignment cross-check model") {
    std::mt19937_64 seeds(97);
    for (int round = 0; round < 10; ++round) {
        const Graph g = gen_random_connected(8 + round, 0.25, seeds());
        const std::uint32_t k = 2;
        const IlpModel pairwise = build_bergamini_model(g, k);
        const Eccentricities ecc = eccentricities(g);
        const IlpModel full = build_full_model(g, k, ecc.ecc, VertexSet{}, &ecc.ecc);
        CHECK(builtin_backend_solve(pairwise).objective == builtin_backend_solve(full).objective);
    }
    const Graph big = gen_named(NamedKind::grid, 20, 11);
    CHECK_THROWS_AS(build_bergamini_model(big, 2), std::invalid_argument);
}
