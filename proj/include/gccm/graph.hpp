#pragma once

// Immutable compressed adjacency graph plus the BFS-based distance and
// farness primitives every solver path is built on. Graphs are undirected,
// unweighted, simple and connected; connectivity is enforced at load time.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gccm {

using Vertex = std::uint32_t;
using DistanceVector = std::vector<std::uint32_t>;

constexpr std::uint32_t kUnreachable = 0xFFFFFFFFu;

/// Sorted set of distinct vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<Vertex> members);

    static VertexSet full(std::size_t n);

    bool contains(Vertex v) const;
    void insert(Vertex v);
    void erase(Vertex v);

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<Vertex> &members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const VertexSet &) const = default;

private:
    std::vector<Vertex> members_;
};

/// Complement of `s` within {0..n-1}.
VertexSet complement(const VertexSet &s, std::size_t n);
/// Union of two vertex sets.
VertexSet set_union(const VertexSet &a, const VertexSet &b);

/// Exact fraction, kept as written (not normalized).
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
    std::string str() const;
    bool equals(const Rational &o) const; // cross-multiplied comparison
};

class Graph {
public:
    /// Builds the CSR structure from an edge list. Self loops and duplicate
    /// edges are dropped, neighbor lists sorted. Throws if the result is
    /// empty or disconnected.
    static Graph from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>> &edges,
                            std::vector<long long> labels = {});

    std::size_t num_vertices() const { return offsets_.size() - 1; }
    std::size_t num_edges() const { return m_; } // undirected edges, counted once

    std::span<const Vertex> neighbors(Vertex v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    std::size_t max_degree() const { return maxDegree_; }

    /// Original input label of a vertex (identity for generated graphs).
    long long label(Vertex v) const { return labels_[v]; }
    const std::vector<long long> &labels() const { return labels_; }

private:
    Graph() = default;
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> targets_;
    std::vector<long long> labels_;
    std::size_t m_ = 0;
    std::size_t maxDegree_ = 0;
};

enum class GraphFormat { edgelist, metis };

/// Parses an edge-list ("u v" per line, '%'/'#' comments, labels remapped in
/// first-appearance order) or METIS ("n m" header, 1-indexed neighbor lines).
Graph load_graph(std::istream &in, GraphFormat format);
Graph load_graph_file(const std::string &path, GraphFormat format);

/// Hop distances from a single source.
DistanceVector bfs(const Graph &g, Vertex source);

/// Hop distances to the nearest member of a non-empty set.
DistanceVector dist_to_set(const Graph &g, const VertexSet &s);

/// f(S) = sum over all vertices of the distance to the nearest member of S.
std::uint64_t group_farness(const Graph &g, const VertexSet &s);

/// c(S) = (n - |S|) / f(S). Throws when f(S) = 0.
Rational group_closeness(const Graph &g, const VertexSet &s);

struct Eccentricities {
    DistanceVector ecc;
    std::uint32_t diameter = 0;
};

/// Per-vertex eccentricities and the diameter, via one BFS per vertex.
Eccentricities eccentricities(const Graph &g);

} // namespace gccm
