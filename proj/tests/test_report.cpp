#include <gccm/bench.hpp>
#include <gccm/generators.hpp>
#include <gccm/ilp.hpp>
#include <gccm/report.hpp>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace gccm;

namespace {

nlohmann::json shipped_schema() {
    std::ifstream in(std::string(GCCM_SHARE_DIR) + "/report.schema.json");
    REQUIRE(in);
    return nlohmann::json::parse(in);
}

} // namespace

TEST_CASE("solve reports satisfy the shipped schema") {
    const nlohmann::json schema = shipped_schema();

    const Graph star = gen_named(NamedKind::star, 5);
    const SolveOutcome outcome = solve_iteratively(star, 2, SolveMode::grover);
    SolveReport report =
        make_report(star, "star", 2, "grover", "optimal", outcome.solution, outcome.farness);
    report.iterations = outcome.iterations;
    for (const auto &it : outcome.history)
        report.variableCounts.push_back(it.variables);
    CHECK(validate_schema(schema, to_json(report)).empty());

    // timeout report with absent farness also validates
    const SolveReport timeoutReport = make_report(star, "star", 2, "ilpind", "timeout", {}, {});
    CHECK(validate_schema(schema, to_json(timeoutReport)).empty());

    // a broken report does not
    nlohmann::json broken = to_json(report);
    broken["status"] = "unknown";
    broken.erase("timings");
    CHECK(validate_schema(schema, broken).size() == 2);
}

TEST_CASE("report farness is recomputed from the set") {
    const Graph p5 = gen_named(NamedKind::path, 5);
    CHECK_THROWS_AS(make_report(p5, "p5", 1, "brute", "optimal", VertexSet({2}), 7),
                    std::logic_error);
    const SolveReport ok = make_report(p5, "p5", 1, "brute", "optimal", VertexSet({2}), 6);
    CHECK(ok.closeness == "4/6");
    CHECK(ok.solutionLabels == std::vector<long long>{2});
}

TEST_CASE("bench rows are deterministic and cross-checked") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "gccm_bench_test";
    fs::create_directories(dir);
    {
        std::ofstream out(dir / "p5.edges");
        out << "0 1\n1 2\n2 3\n3 4\n";
    }

    BenchSpec spec;
    spec.graphPaths = {(dir / "p5.edges").string()};
    spec.kMin = 2;
    spec.kMax = 3;
    spec.modes = {"grover"};
    spec.repeats = 1;
    const std::vector<BenchRow> rows = run_bench(spec);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].k == 2);
    CHECK(rows[1].k == 3);
    for (const BenchRow &row : rows) {
        CHECK(row.status == "optimal");
        const Graph p5 = gen_named(NamedKind::path, 5);
        const SolveOutcome direct = solve_iteratively(p5, row.k, SolveMode::grover);
        CHECK(row.farness == direct.farness);
    }

    std::ostringstream csv;
    write_csv(csv, rows);
    CHECK(csv.str().rfind("graph,k,mode,repeat,status,farness,iterations,total_ms\n", 0) == 0);

    // an immediate deadline turns into a timeout row with an empty farness
    BenchSpec timeoutSpec = spec;
    timeoutSpec.kMax = 2;
    timeoutSpec.timeLimitSec = 1e-9;
    const std::vector<BenchRow> timeoutRows = run_bench(timeoutSpec);
    REQUIRE(timeoutRows.size() == 1);
    CHECK(timeoutRows[0].status == "timeout");
    CHECK(!timeoutRows[0].farness.has_value());
    std::ostringstream timeoutCsv;
    write_csv(timeoutCsv, timeoutRows);
    CHECK(timeoutCsv.str().find(",timeout,,") != std::string::npos);

    // parallel workers produce the same rows in the same order
    BenchSpec parallel = spec;
    parallel.jobs = 3;
    parallel.repeats = 2;
    BenchSpec serial = parallel;
    serial.jobs = 1;
    const std::vector<BenchRow> parallelRows = run_bench(parallel);
    const std::vector<BenchRow> serialRows = run_bench(serial);
    REQUIRE(parallelRows.size() == serialRows.size());
    for (std::size_t i = 0; i < serialRows.size(); ++i) {
        CHECK(parallelRows[i].graph == serialRows[i].graph);
        CHECK(parallelRows[i].k == serialRows[i].k);
        CHECK(parallelRows[i].repeat == serialRows[i].repeat);
        CHECK(parallelRows[i].farness == serialRows[i].farness);
    }
    fs::remove_all(dir);
}
