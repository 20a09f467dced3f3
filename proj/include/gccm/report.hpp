#pragma once

// Machine-readable solve reports plus a small structural validator for the
// JSON schema shipped in share/.

#include <gccm/graph.hpp>
#include <gccm/ilp.hpp>

#include <json.hpp>

#include <optional>
#include <string>

namespace gccm {

struct SolveReport {
    std::string graphName;
    std::size_t n = 0;
    std::size_t m = 0;
    std::uint32_t k = 0;
    std::string mode;
    std::string status; // optimal | timeout | approx
    std::vector<long long> solutionLabels;
    std::optional<std::uint64_t> farness;
    std::optional<std::string> closeness; // "p/q"
    std::uint32_t iterations = 0;
    std::vector<std::size_t> variableCounts;
    std::size_t dominatedCount = 0;
    std::size_t absorbedCount = 0;
    double reductionMs = 0, heuristicMs = 0, ilpMs = 0, totalMs = 0;
};

nlohmann::json to_json(const SolveReport &report);

/// Assembles the report and recomputes farness and closeness from the
/// solution set from scratch; a disagreement with `claimedFarness` throws.
SolveReport make_report(const Graph &g, const std::string &graphName, std::uint32_t k,
                        const std::string &mode, const std::string &status, const VertexSet &solution,
                        std::optional<std::uint64_t> claimedFarness);

/// Validates an instance against the subset of JSON Schema the shipped
/// schema uses (type, enum, required, properties, items). Returns a list of
/// violations, empty when valid.
std::vector<std::string> validate_schema(const nlohmann::json &schema, const nlohmann::json &instance);

} // namespace gccm
