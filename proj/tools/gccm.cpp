// Command-line front end: exact solves (iterative models, branch-and-bound,
// enumeration), approximation runs, reduction statistics, k-sweep benchmarks,
// graph generation, and a reference LP solver for external-backend plumbing.
//
// Exit codes: 0 solved/ok, 1 usage or input error, 2 time limit hit,
// 3 internal consistency failure.

#include <gccm/bench.hpp>
#include <gccm/exact.hpp>
#include <gccm/generators.hpp>
#include <gccm/graph.hpp>
#include <gccm/heuristics.hpp>
#include <gccm/ilp.hpp>
#include <gccm/report.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitTimeout = 2;
constexpr int kExitInternal = 3;

gccm::GraphFormat parse_format(const std::string &name) {
    if (name == "edgelist")
        return gccm::GraphFormat::edgelist;
    if (name == "metis")
        return gccm::GraphFormat::metis;
    throw CLI::ValidationError("--format", "expected edgelist or metis");
}

std::string graph_name(const std::string &path) {
    return std::filesystem::path(path).filename().string();
}

void fill_loop_stats(gccm::SolveReport &report, const gccm::SolveOutcome &outcome) {
    report.iterations = outcome.iterations;
    for (const auto &it : outcome.history)
        report.variableCounts.push_back(it.variables);
    report.dominatedCount = outcome.dominatedCount;
    report.absorbedCount = outcome.absorbedCount;
    report.reductionMs = outcome.reductionMs;
    report.heuristicMs = outcome.heuristicMs;
    report.ilpMs = outcome.ilpMs;
    report.totalMs = outcome.totalMs;
}

int cmd_solve(const std::string &graphPath, const std::string &format, std::uint32_t k,
              const std::string &mode, const std::string &backend, double timeLimit) {
    const gccm::Graph g = gccm::load_graph_file(graphPath, parse_format(format));
    if (k > g.num_vertices()) {
        std::cerr << "error: k exceeds the vertex count\n";
        return kExitUsage;
    }

    gccm::SolveReport report;
    const auto start = std::chrono::steady_clock::now();
    if (mode == "grover" || mode == "ilpind") {
        gccm::BackendSpec spec;
        if (backend != "builtin") {
            if (backend.rfind("cmd:", 0) != 0) {
                std::cerr << "error: --backend expects 'builtin' or 'cmd:<template>'\n";
                return kExitUsage;
            }
            spec.builtin = false;
            spec.commandTemplate = backend.substr(4);
        }
        const gccm::SolveOutcome outcome = gccm::solve_iteratively(
            g, k, mode == "grover" ? gccm::SolveMode::grover : gccm::SolveMode::ilpind, spec,
            timeLimit);
        if (outcome.status == gccm::SolveStatus::timeout) {
            report = gccm::make_report(g, graph_name(graphPath), k, mode, "timeout", {}, {});
            fill_loop_stats(report, outcome);
            std::cout << gccm::to_json(report).dump(2) << "\n";
            return kExitTimeout;
        }
        report = gccm::make_report(g, graph_name(graphPath), k, mode, "optimal", outcome.solution,
                                   outcome.farness);
        fill_loop_stats(report, outcome);
    } else { // bb | brute
        gccm::ExactResult result;
        if (mode == "bb") {
            gccm::BranchAndBoundOptions opts;
            opts.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                        std::chrono::duration<double>(timeLimit));
            result = gccm::branch_and_bound(g, k, gccm::VertexSet::full(g.num_vertices()), opts);
        } else {
            result = gccm::brute_force(g, k, gccm::VertexSet::full(g.num_vertices()));
        }
        if (result.status == gccm::ExactStatus::timeout) {
            report = gccm::make_report(g, graph_name(graphPath), k, mode, "timeout", {}, {});
            std::cout << gccm::to_json(report).dump(2) << "\n";
            return kExitTimeout;
        }
        report = gccm::make_report(g, graph_name(graphPath), k, mode, "optimal", result.set,
                                   result.farness);
        report.totalMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                                   start)
                             .count();
    }
    std::cout << gccm::to_json(report).dump(2) << "\n";
    return kExitOk;
}

int cmd_approx(const std::string &graphPath, const std::string &format, std::uint32_t k,
               const std::string &algo, bool useDominated, std::uint64_t seed) {
    const gccm::Graph g = gccm::load_graph_file(graphPath, parse_format(format));
    if (k > g.num_vertices()) {
        std::cerr << "error: k exceeds the vertex count\n";
        return kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    gccm::ReductionResult reduction;
    if (useDominated) {
        reduction = gccm::reduce_graph(g, k);
    } else {
        reduction.alpha.assign(g.num_vertices(), 0);
        reduction.rho.assign(g.num_vertices(), gccm::kInvalidAbsorber);
    }

    gccm::HeuristicSolution solution;
    if (algo == "greedy") {
        solution = gccm::greedy(g, k);
    } else if (algo == "greedy-ls") {
        solution = gccm::approx_pipeline(g, k, reduction, useDominated);
    } else { // ls: seeded uniform initial set inside the search space
        gccm::VertexSet space = useDominated
                                    ? gccm::complement(reduction.dominated, g.num_vertices())
                                    : gccm::VertexSet::full(g.num_vertices());
        std::vector<gccm::Vertex> pool = space.members();
        std::mt19937_64 rng(seed);
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(k);
        solution = gccm::local_search_swap(g, k, gccm::VertexSet(pool), space);
    }

    gccm::SolveReport report =
        gccm::make_report(g, graph_name(graphPath), k, algo, "approx", solution.set, solution.farness);
    report.dominatedCount = reduction.dominated.size();
    report.absorbedCount = reduction.absorbed.size();
    report.totalMs =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << gccm::to_json(report).dump(2) << "\n";
    return kExitOk;
}

int cmd_reduce(const std::string &graphPath, const std::string &format, std::uint32_t k) {
    const gccm::Graph g = gccm::load_graph_file(graphPath, parse_format(format));
    if (k > g.num_vertices()) {
        std::cerr << "error: k exceeds the vertex count\n";
        return kExitUsage;
    }
    const gccm::ReductionResult reduction = gccm::reduce_graph(g, k);
    const gccm::Eccentricities ecc = gccm::eccentricities(g);
    const std::size_t n = g.num_vertices();

    nlohmann::json j;
    j["graph"] = graph_name(graphPath);
    j["n"] = n;
    j["m"] = g.num_edges();
    j["k"] = k;
    j["density"] = n < 2 ? 0.0
                         : 2.0 * static_cast<double>(g.num_edges()) /
                               (static_cast<double>(n) * static_cast<double>(n - 1));
    j["diameter"] = ecc.diameter;
    j["dominated"] = reduction.dominated.size();
    j["absorbed"] = reduction.absorbed.size();
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_gen(const std::string &kind, std::uint32_t r, std::uint32_t k, std::size_t n, double p,
            std::size_t gridRows, std::size_t gridCols, std::uint64_t seed,
            const std::string &outPath) {
    nlohmann::json meta;
    meta["kind"] = kind;
    meta["seed"] = seed;

    gccm::Graph g = [&]() {
        if (kind == "counterexample") {
            auto [graph, landmarks] = gccm::gen_counterexample(r, k);
            meta["r"] = r;
            meta["k"] = k;
            meta["center"] = landmarks.center;
            meta["endpoints"] = landmarks.endpoints;
            return graph;
        }
        if (kind == "gnp") {
            meta["p"] = p;
            return gccm::gen_random_connected(n, p, seed);
        }
        if (kind == "path")
            return gccm::gen_named(gccm::NamedKind::path, n);
        if (kind == "star")
            return gccm::gen_named(gccm::NamedKind::star, n);
        if (kind == "cycle")
            return gccm::gen_named(gccm::NamedKind::cycle, n);
        if (kind == "complete")
            return gccm::gen_named(gccm::NamedKind::complete, n);
        return gccm::gen_named(gccm::NamedKind::grid, gridRows, gridCols);
    }();
    meta["n"] = g.num_vertices();
    meta["m"] = g.num_edges();

    std::ofstream edges(outPath);
    if (!edges) {
        std::cerr << "error: cannot write " << outPath << "\n";
        return kExitUsage;
    }
    edges << "% " << kind << " n=" << g.num_vertices() << " m=" << g.num_edges() << "\n";
    for (gccm::Vertex v = 0; v < g.num_vertices(); ++v)
        for (gccm::Vertex w : g.neighbors(v))
            if (v < w)
                edges << v << " " << w << "\n";
    std::ofstream metaOut(outPath + ".json");
    metaOut << meta.dump(2) << "\n";
    return kExitOk;
}

int cmd_bench(const gccm::BenchSpec &spec, const std::string &outPath) {
    const std::vector<gccm::BenchRow> rows = gccm::run_bench(spec);
    std::ofstream out(outPath);
    if (!out) {
        std::cerr << "error: cannot write " << outPath << "\n";
        return kExitUsage;
    }
    gccm::write_csv(out, rows);
    return kExitOk;
}

// Reference LP solver: parse, solve with the builtin backend, write the
// assignment as "name value" lines. Lets the external-backend path be
// exercised end to end without a commercial solver.
int cmd_solve_lp(const std::string &lpPath, const std::string &solPath) {
    std::ifstream in(lpPath);
    if (!in) {
        std::cerr << "error: cannot open " << lpPath << "\n";
        return kExitUsage;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const gccm::IlpModel model = gccm::parse_lp(buffer.str());
    const gccm::BackendResult result = gccm::builtin_backend_solve(model);
    std::ofstream out(solPath);
    if (!out) {
        std::cerr << "error: cannot write " << solPath << "\n";
        return kExitUsage;
    }
    out << "# objective " << result.objective << "\n";
    for (std::size_t mi = 0; mi < model.modeled.size(); ++mi)
        out << "x_" << model.modeled[mi] << "_" << result.levels[mi] << " 1\n";
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Group closeness centrality maximization toolkit"};
    app.require_subcommand(1);

    std::string graphPath, format = "edgelist", mode = "grover", backend = "builtin";
    std::string algo = "greedy-ls", kind, outPath = "out";
    std::uint32_t k = 1, r = 2, genK = 2;
    std::size_t n = 10, gridRows = 3, gridCols = 3;
    double p = 0.2, timeLimit = 600.0;
    std::uint64_t seed = 1;
    bool useDominated = true;

    auto *solve = app.add_subcommand("solve", "Exact solve of one instance");
    solve->add_option("--graph", graphPath)->required();
    solve->add_option("--format", format)->check(CLI::IsMember({"edgelist", "metis"}));
    solve->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    solve->add_option("--mode", mode)->check(CLI::IsMember({"grover", "ilpind", "bb", "brute"}));
    solve->add_option("--backend", backend);
    solve->add_option("--time-limit", timeLimit)->check(CLI::PositiveNumber);
    solve->add_option("--seed", seed);

    auto *approx = app.add_subcommand("approx", "Heuristic solve of one instance");
    approx->add_option("--graph", graphPath)->required();
    approx->add_option("--format", format)->check(CLI::IsMember({"edgelist", "metis"}));
    approx->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    approx->add_option("--algo", algo)->check(CLI::IsMember({"greedy", "ls", "greedy-ls"}));
    approx->add_option("--use-dominated", useDominated);
    approx->add_option("--seed", seed);

    auto *reduce = app.add_subcommand("reduce", "Reduction statistics for one graph");
    reduce->add_option("--graph", graphPath)->required();
    reduce->add_option("--format", format)->check(CLI::IsMember({"edgelist", "metis"}));
    reduce->add_option("--k", k)->required()->check(CLI::PositiveNumber);

    gccm::BenchSpec benchSpec;
    std::string graphsDir, modesArg = "grover";
    auto *bench = app.add_subcommand("bench", "k-sweep over a directory of graphs");
    bench->add_option("--graphs", graphsDir)->required();
    bench->add_option("--format", format)->check(CLI::IsMember({"edgelist", "metis"}));
    bench->add_option("--k-min", benchSpec.kMin)->check(CLI::PositiveNumber);
    bench->add_option("--k-max", benchSpec.kMax)->check(CLI::PositiveNumber);
    bench->add_option("--modes", modesArg, "comma-separated: grover,ilpind,bb,brute");
    bench->add_option("--time-limit", benchSpec.timeLimitSec)->check(CLI::PositiveNumber);
    bench->add_option("--repeats", benchSpec.repeats)->check(CLI::PositiveNumber);
    bench->add_option("--jobs", benchSpec.jobs)->check(CLI::PositiveNumber);
    bench->add_option("--out", outPath)->required();

    auto *gen = app.add_subcommand("gen", "Write a generated graph plus metadata sidecar");
    gen->add_option("--kind", kind)
        ->required()
        ->check(CLI::IsMember({"counterexample", "gnp", "path", "star", "cycle", "complete", "grid"}));
    gen->add_option("--r", r);
    gen->add_option("--k", genK);
    gen->add_option("--n", n);
    gen->add_option("--p", p);
    gen->add_option("--rows", gridRows);
    gen->add_option("--cols", gridCols);
    gen->add_option("--seed", seed);
    gen->add_option("--out", outPath)->required();

    std::string lpPath, solPath;
    auto *solveLp = app.add_subcommand("solve-lp", "Solve an exported LP file exactly");
    solveLp->add_option("lp", lpPath)->required();
    solveLp->add_option("sol", solPath)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve->parsed())
            return cmd_solve(graphPath, format, k, mode, backend, timeLimit);
        if (approx->parsed())
            return cmd_approx(graphPath, format, k, algo, useDominated, seed);
        if (reduce->parsed())
            return cmd_reduce(graphPath, format, k);
        if (bench->parsed()) {
            benchSpec.format = parse_format(format);
            std::vector<std::string> paths;
            for (const auto &entry : std::filesystem::directory_iterator(graphsDir))
                if (entry.is_regular_file() && entry.path().extension() != ".json")
                    paths.push_back(entry.path().string());
            std::sort(paths.begin(), paths.end());
            benchSpec.graphPaths = std::move(paths);
            benchSpec.modes.clear();
            std::stringstream ms(modesArg);
            std::string one;
            while (std::getline(ms, one, ','))
                benchSpec.modes.push_back(one);
            return cmd_bench(benchSpec, outPath);
        }
        if (gen->parsed())
            return cmd_gen(kind, r, genK, n, p, gridRows, gridCols, seed, outPath);
        if (solveLp->parsed())
            return cmd_solve_lp(lpPath, solPath);
    } catch (const std::logic_error &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
