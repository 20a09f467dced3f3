#include <gccm/ilp.hpp>

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace gccm {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

} // namespace

SolveOutcome solve_iteratively(const Graph &g, std::uint32_t k, SolveMode mode,
                               const BackendSpec &backend, double timeLimitSec) {
    const std::size_t n = g.num_vertices();
    if (k < 1 || k > n)
        throw std::invalid_argument("solve_iteratively: k out of range");

    const Clock::time_point start = Clock::now();
    const Clock::time_point deadline =
        start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(timeLimitSec));

    SolveOutcome outcome;

    if (k == 1) {
        const HeuristicSolution exact = greedy(g, 1);
        outcome.solution = exact.set;
        outcome.farness = exact.farness;
        outcome.heuristicMs = ms_since(start);
        outcome.totalMs = ms_since(start);
        return outcome;
    }

    const Eccentricities ecc = eccentricities(g);

    const Clock::time_point reductionStart = Clock::now();
    ReductionResult reduction;
    if (mode == SolveMode::grover) {
        reduction = reduce_graph(g, k);
    } else {
        reduction.dominated = compute_dominated(g, k);
        reduction.alpha.assign(n, 0);
        reduction.rho.assign(n, kInvalidAbsorber);
    }
    outcome.dominatedCount = reduction.dominated.size();
    outcome.absorbedCount = reduction.absorbed.size();
    outcome.reductionMs = ms_since(reductionStart);

    std::vector<std::uint32_t> dMap(n);
    const Clock::time_point heuristicStart = Clock::now();
    if (mode == SolveMode::grover) {
        const HeuristicSolution approx = approx_pipeline(g, k, reduction);
        dMap = estimate_d(g, approx.set, ecc.ecc);
    } else {
        for (std::size_t v = 0; v < n; ++v)
            dMap[v] = std::min(2u, ecc.ecc[v]);
    }
    outcome.heuristicMs = ms_since(heuristicStart);

    const Clock::time_point loopStart = Clock::now();
    IlpModel model = mode == SolveMode::grover
                         ? build_reduced_model(g, k, dMap, reduction, &ecc.ecc)
                         : build_full_model(g, k, dMap, reduction.dominated, &ecc.ecc);

    while (true) {
        if (Clock::now() >= deadline) {
            outcome.status = SolveStatus::timeout;
            break;
        }
        BackendResult result = backend.builtin
                                   ? builtin_backend_solve(model, deadline)
                                   : external_backend_solve(model, backend.commandTemplate);
        if (result.status == BackendStatus::timeout) {
            outcome.status = SolveStatus::timeout;
            break;
        }
        ++outcome.iterations;

        const std::vector<Vertex> insufficient = check_sufficiency(result, model, ecc.ecc);
        outcome.history.push_back({model.variable_count(), result.objective, insufficient.size()});
        if (insufficient.empty()) {
            outcome.solution = result.selected;
            outcome.farness = group_farness(g, outcome.solution);
            if (static_cast<std::int64_t>(outcome.farness) != result.objective)
                throw std::logic_error("sufficient model objective disagrees with recomputed farness");
            break;
        }
        for (Vertex v : insufficient) {
            const std::size_t mi = model.modeled_index(v);
            ++model.levelCap[mi]; // check_sufficiency only flags caps below ecc
            dMap[v] = model.levelCap[mi];
        }
    }
    outcome.ilpMs = ms_since(loopStart);
    outcome.totalMs = ms_since(start);
    return outcome;
}

} // namespace gccm
