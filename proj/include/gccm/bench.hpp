#pragma once

// Sweep harness: every (graph, k, mode, repeat) combination becomes one CSV
// row. Rows are emitted in a deterministic order regardless of how many
// worker threads computed them.

#include <gccm/graph.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gccm {

struct BenchSpec {
    std::vector<std::string> graphPaths; // processed in the given order
    GraphFormat format = GraphFormat::edgelist;
    std::uint32_t kMin = 2;
    std::uint32_t kMax = 20;
    std::vector<std::string> modes; // grover | ilpind | bb | brute
    double timeLimitSec = 600.0;
    int repeats = 5;
    int jobs = 1;
};

struct BenchRow {
    std::string graph;
    std::uint32_t k = 0;
    std::string mode;
    int repeat = 0;
    std::string status; // optimal | timeout | error
    std::optional<std::uint64_t> farness;
    std::uint32_t iterations = 0;
    double totalMs = 0;
};

std::vector<BenchRow> run_bench(const BenchSpec &spec);

/// Header: graph,k,mode,repeat,status,farness,iterations,total_ms.
/// Timeout rows leave the farness column empty.
void write_csv(std::ostream &out, const std::vector<BenchRow> &rows);

} // namespace gccm
