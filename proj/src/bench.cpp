#include <gccm/bench.hpp>

#include <gccm/exact.hpp>
#include <gccm/ilp.hpp>

#include <atomic>
#include <chrono>
#include <filesystem>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace gccm {

namespace {

BenchRow run_instance(const Graph &g, const std::string &name, std::uint32_t k,
                      const std::string &mode, int repeat, double timeLimitSec) {
    BenchRow row;
    row.graph = name;
    row.k = k;
    row.mode = mode;
    row.repeat = repeat;
    const auto start = std::chrono::steady_clock::now();
    try {
        if (mode == "grover" || mode == "ilpind") {
            const SolveOutcome outcome = solve_iteratively(
                g, k, mode == "grover" ? SolveMode::grover : SolveMode::ilpind, {}, timeLimitSec);
            row.iterations = outcome.iterations;
            if (outcome.status == SolveStatus::optimal) {
                row.status = "optimal";
                row.farness = outcome.farness;
            } else {
                row.status = "timeout";
            }
        } else if (mode == "bb") {
            BranchAndBoundOptions opts;
            opts.deadline = std::chrono::steady_clock::now() +
                            std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                std::chrono::duration<double>(timeLimitSec));
            const ExactResult result = branch_and_bound(g, k, VertexSet::full(g.num_vertices()), opts);
            if (result.status == ExactStatus::optimal) {
                row.status = "optimal";
                row.farness = result.farness;
            } else {
                row.status = "timeout";
            }
        } else if (mode == "brute") {
            const ExactResult result = brute_force(g, k, VertexSet::full(g.num_vertices()));
            row.status = "optimal";
            row.farness = result.farness;
        } else {
            throw std::invalid_argument("unknown mode: " + mode);
        }
    } catch (const std::exception &) {
        row.status = "error";
    }
    row.totalMs =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return row;
}

} // namespace

std::vector<BenchRow> run_bench(const BenchSpec &spec) {
    struct Instance {
        const Graph *g;
        std::string name;
        std::uint32_t k;
        std::string mode;
        int repeat;
    };

    std::vector<std::pair<std::string, Graph>> graphs;
    graphs.reserve(spec.graphPaths.size());
    for (const std::string &path : spec.graphPaths)
        graphs.emplace_back(std::filesystem::path(path).filename().string(),
                            load_graph_file(path, spec.format));

    std::vector<Instance> instances;
    for (const auto &[name, g] : graphs)
        for (std::uint32_t k = spec.kMin; k <= spec.kMax && k <= g.num_vertices(); ++k)
            for (const std::string &mode : spec.modes)
                for (int repeat = 1; repeat <= spec.repeats; ++repeat)
                    instances.push_back({&g, name, k, mode, repeat});

    std::vector<BenchRow> rows(instances.size());
    if (spec.jobs <= 1) {
        for (std::size_t i = 0; i < instances.size(); ++i) {
            const Instance &inst = instances[i];
            rows[i] = run_instance(*inst.g, inst.name, inst.k, inst.mode, inst.repeat,
                                   spec.timeLimitSec);
        }
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= instances.size())
                    return;
                const Instance &inst = instances[i];
                rows[i] = run_instance(*inst.g, inst.name, inst.k, inst.mode, inst.repeat,
                                       spec.timeLimitSec);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < spec.jobs; ++t)
            pool.emplace_back(worker);
        for (std::thread &t : pool)
            t.join();
    }
    return rows;
}

void write_csv(std::ostream &out, const std::vector<BenchRow> &rows) {
    out << "graph,k,mode,repeat,status,farness,iterations,total_ms\n";
    for (const BenchRow &row : rows) {
        out << row.graph << ',' << row.k << ',' << row.mode << ',' << row.repeat << ','
            << row.status << ',';
        if (row.farness)
            out << *row.farness;
        out << ',' << row.iterations << ',' << row.totalMs << '\n';
    }
}

} // namespace gccm
