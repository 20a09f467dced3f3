#pragma once

// Distance-level 0/1 models and the iterative sufficiency loop. A model has
// variables x_{v,i} meaning "v's distance to the chosen centers is i", per
// vertex capped at d(v): the top variable carries no linking row and means
// "at least d(v)". Solving therefore minimizes the truncated farness
// sum_v cost_v(min(dist(v,S), d(v))) over k-subsets of centers, which the
// builtin backend exploits directly. Whenever the returned optimum activates
// a top variable below the vertex's eccentricity the model may be hiding a
// better solution, so those caps grow by one and the model is re-solved;
// once no such variable is active the extracted set is a global optimum.
//
// The reduced kind drops absorbed vertices and prices their distance into
// the absorber: level i of an absorber with alpha absorbed neighbors costs
// alpha*(i+1) + i instead of i.

#include <gccm/exact.hpp>
#include <gccm/graph.hpp>
#include <gccm/heuristics.hpp>
#include <gccm/reductions.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace gccm {

enum class ModelKind { full, reduced, bergamini };

struct IlpModel {
    ModelKind kind = ModelKind::full;
    std::uint32_t k = 0;
    std::size_t n = 0;

    std::vector<Vertex> centers; // ascending; eligible for level 0
    std::vector<Vertex> modeled; // ascending; vertices carrying variables
    std::vector<std::uint32_t> levelCap; // per modeled index
    std::vector<std::uint32_t> alpha;    // per modeled index
    std::vector<std::uint8_t> isCenter;  // per modeled index

    // Hop distance from each center to each modeled vertex. Parsed models
    // reconstruct these from the link rows, truncated at the level cap;
    // the backend only ever looks at min(dist, cap), so both agree.
    RowMatrix centerDist;

    // Per-level objective coefficients for models read back from LP text.
    std::optional<std::vector<std::vector<std::int64_t>>> explicitCost;

    std::int64_t cost(std::size_t mi, std::uint32_t level) const;
    std::size_t variable_count() const;
    std::size_t modeled_index(Vertex v) const;
    /// Centers at hop distance exactly `i` from modeled vertex `v`
    /// (the right-hand side of the linking row).
    std::vector<Vertex> centers_at_distance(Vertex v, std::uint32_t i) const;
};

/// Variables x_{v,i} for every vertex, level 0 removed for dominated
/// vertices. dMap(v) must lie in [2, ecc(v)] (or equal ecc(v) when that is
/// smaller than 2).
IlpModel build_full_model(const Graph &g, std::uint32_t k, const std::vector<std::uint32_t> &dMap,
                          const VertexSet &dominated, const DistanceVector *eccHint = nullptr);

/// Variables only for non-absorbed vertices, absorber levels priced at
/// alpha(v)*(i+1) + i.
IlpModel build_reduced_model(const Graph &g, std::uint32_t k, const std::vector<std::uint32_t> &dMap,
                             const ReductionResult &reduction, const DistanceVector *eccHint = nullptr);

/// Pairwise-assignment formulation kept as an independent cross-check;
/// solved by exhaustive enumeration, guarded to n <= 200.
IlpModel build_bergamini_model(const Graph &g, std::uint32_t k);

/// d(v) = min(ecc(v), max(dist(v, approx) + 1, 2)).
std::vector<std::uint32_t> estimate_d(const Graph &g, const VertexSet &approx,
                                      const DistanceVector &ecc);

enum class BackendStatus { optimal, timeout };

struct BackendResult {
    BackendStatus status = BackendStatus::optimal;
    std::int64_t objective = 0;
    VertexSet selected;                 // centers with an active level-0 variable
    std::vector<std::uint32_t> levels;  // active level per modeled index
    std::uint64_t nodes = 0;
};

/// Exact solve of the truncated objective by set enumeration over centers
/// (branch-and-bound; exhaustive for the bergamini kind).
BackendResult builtin_backend_solve(const IlpModel &model, Deadline deadline = {});

/// Vertices whose active variable sits at the cap while the cap is still
/// below their eccentricity; non-empty means another iteration is needed.
std::vector<Vertex> check_sufficiency(const BackendResult &result, const IlpModel &model,
                                      const DistanceVector &ecc);

// --- LP-file exchange -----------------------------------------------------

/// CPLEX-LP text: rows k_sum, assign_<v>, link_<v>_<i>; variables x_<v>_<i>;
/// vertices and levels in ascending order. Deterministic byte-for-byte.
std::string export_lp(const IlpModel &model);

/// Parses the dialect produced by export_lp back into a model.
IlpModel parse_lp(const std::string &text);

/// Reads a "name value" solution listing, verifies feasibility against the
/// model (naming the violated row otherwise) and recomputes the objective
/// from the assignment.
BackendResult import_solution(const std::string &text, const IlpModel &model);

/// Writes the model to an LP file, runs the command template ({lp} and
/// {sol} placeholders), and imports the resulting solution file.
BackendResult external_backend_solve(const IlpModel &model, const std::string &commandTemplate);

// --- Reduced-to-full transformation ---------------------------------------

struct FullAssignment {
    std::vector<std::uint32_t> levels; // active level per vertex
    std::vector<std::uint32_t> dMap;   // induced caps: d(rho(v)) + 1 for absorbed v
    std::int64_t objective = 0;        // plain sum of active levels
};

/// Expands a reduced optimum to a full-model assignment: an absorbed vertex
/// copies its absorber's level shifted up by one.
FullAssignment reconstruct_full_assignment(const BackendResult &reduced, const IlpModel &reducedModel,
                                           const ReductionResult &reduction);

/// Checks a full assignment against the full model's constraint families;
/// on failure `reason` names the violated row.
bool verify_full_assignment(const Graph &g, const VertexSet &dominated, std::uint32_t k,
                            const FullAssignment &fa, const VertexSet &selected,
                            std::string *reason = nullptr);

// --- Iterative solver ------------------------------------------------------

enum class SolveMode { grover, ilpind };
enum class SolveStatus { optimal, timeout };

struct BackendSpec {
    bool builtin = true;
    std::string commandTemplate; // used when builtin is false
};

struct IterationRecord {
    std::size_t variables = 0;
    std::int64_t objective = 0;
    std::size_t insufficient = 0;
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::optimal;
    VertexSet solution;
    std::uint64_t farness = 0;
    std::uint32_t iterations = 0; // model solves; 0 on the k=1 greedy path
    std::vector<IterationRecord> history;
    std::size_t dominatedCount = 0;
    std::size_t absorbedCount = 0;
    double reductionMs = 0, heuristicMs = 0, ilpMs = 0, totalMs = 0;
};

/// k = 1 returns the greedy pick, which is exact. Otherwise grover mode runs
/// the reduced model seeded by the approximation pipeline's caps, ilpind mode
/// the full model with caps starting at 2; both loop until sufficient.
SolveOutcome solve_iteratively(const Graph &g, std::uint32_t k, SolveMode mode,
                               const BackendSpec &backend = {}, double timeLimitSec = 600.0);

} // namespace gccm
