#include <gccm/graph.hpp>

#include <gccm/kernels.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace gccm {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::full(std::size_t n) {
    VertexSet s;
    s.members_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        s.members_[i] = static_cast<Vertex>(i);
    return s;
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::insert(Vertex v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v)
        members_.insert(it, v);
}

void VertexSet::erase(Vertex v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it != members_.end() && *it == v)
        members_.erase(it);
}

VertexSet complement(const VertexSet &s, std::size_t n) {
    std::vector<Vertex> out;
    out.reserve(n - s.size());
    auto it = s.begin();
    for (std::size_t v = 0; v < n; ++v) {
        if (it != s.end() && *it == v) {
            ++it;
        } else {
            out.push_back(static_cast<Vertex>(v));
        }
    }
    return VertexSet(std::move(out));
}

VertexSet set_union(const VertexSet &a, const VertexSet &b) {
    std::vector<Vertex> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

std::string Rational::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

bool Rational::equals(const Rational &o) const {
    return static_cast<unsigned __int128>(num) * o.den == static_cast<unsigned __int128>(o.num) * den;
}

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>> &edges,
                        std::vector<long long> labels) {
    if (n == 0)
        throw std::runtime_error("empty graph input");
    if (labels.empty()) {
        labels.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            labels[i] = static_cast<long long>(i);
    }
    if (labels.size() != n)
        throw std::invalid_argument("label table size mismatch");

    std::vector<std::size_t> deg(n, 0);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v)
            continue; // self loop
        ++deg[u];
        ++deg[v];
    }

    Graph g;
    g.offsets_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        g.offsets_[i + 1] = g.offsets_[i] + deg[i];
    g.targets_.resize(g.offsets_[n]);
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : edges) {
        if (u == v)
            continue;
        g.targets_[fill[u]++] = v;
        g.targets_[fill[v]++] = u;
    }

    // Sort and deduplicate each neighbor list, then recompact.
    std::vector<std::size_t> newOffsets(n + 1, 0);
    std::size_t write = 0;
    for (std::size_t v = 0; v < n; ++v) {
        auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
        auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
        std::sort(first, last);
        auto uniqueEnd = std::unique(first, last);
        newOffsets[v] = write;
        for (auto it = first; it != uniqueEnd; ++it)
            g.targets_[write++] = *it;
    }
    newOffsets[n] = write;
    g.targets_.resize(write);
    g.offsets_ = std::move(newOffsets);
    g.m_ = write / 2;
    g.labels_ = std::move(labels);
    for (std::size_t v = 0; v < n; ++v)
        g.maxDegree_ = std::max(g.maxDegree_, g.degree(static_cast<Vertex>(v)));

    // Connectivity check; report a witness pair on failure.
    DistanceVector dist = bfs(g, 0);
    for (std::size_t v = 0; v < n; ++v) {
        if (dist[v] == kUnreachable)
            throw std::runtime_error("disconnected graph: vertices " + std::to_string(g.labels_[0]) +
                                     " and " + std::to_string(g.labels_[v]) +
                                     " are in different components");
    }
    return g;
}

namespace {

Graph parse_edgelist(std::istream &in) {
    std::unordered_map<long long, Vertex> idOf;
    std::vector<long long> labels;
    std::vector<std::pair<Vertex, Vertex>> edges;
    auto intern = [&](long long label) {
        auto [it, inserted] = idOf.try_emplace(label, static_cast<Vertex>(labels.size()));
        if (inserted)
            labels.push_back(label);
        return it->second;
    };

    std::string line;
    while (std::getline(in, line)) {
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '%' || line[pos] == '#')
            continue;
        std::istringstream ls(line.substr(pos));
        long long a, b;
        if (!(ls >> a >> b))
            throw std::runtime_error("malformed edge-list line: '" + line + "'");
        const Vertex u = intern(a); // ids follow first-appearance order
        const Vertex v = intern(b);
        edges.emplace_back(u, v);
    }
    if (labels.empty())
        throw std::runtime_error("empty graph input");
    const std::size_t n = labels.size();
    return Graph::from_edges(n, edges, std::move(labels));
}

Graph parse_metis(std::istream &in) {
    std::string line;
    std::size_t n = 0, m = 0;
    bool headerSeen = false;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::size_t vertex = 0;
    while (std::getline(in, line)) {
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos && !headerSeen)
            continue;
        if (pos != std::string::npos && line[pos] == '%')
            continue;
        std::istringstream ls(line);
        if (!headerSeen) {
            long long fmt = 0;
            if (!(ls >> n >> m))
                throw std::runtime_error("malformed METIS header");
            if (ls >> fmt && fmt != 0)
                throw std::runtime_error("unsupported METIS format code " + std::to_string(fmt));
            headerSeen = true;
            continue;
        }
        if (vertex >= n)
            throw std::runtime_error("METIS file has more vertex lines than declared");
        long long nb;
        while (ls >> nb) {
            if (nb < 1 || static_cast<std::size_t>(nb) > n)
                throw std::runtime_error("METIS neighbor id out of range");
            edges.emplace_back(static_cast<Vertex>(vertex), static_cast<Vertex>(nb - 1));
        }
        ++vertex;
    }
    if (!headerSeen || n == 0)
        throw std::runtime_error("empty graph input");
    if (vertex != n)
        throw std::runtime_error("METIS file has fewer vertex lines than declared");
    std::vector<long long> labels(n);
    for (std::size_t i = 0; i < n; ++i)
        labels[i] = static_cast<long long>(i + 1); // METIS vertices are 1-indexed
    Graph g = Graph::from_edges(n, edges, std::move(labels));
    if (g.num_edges() != m)
        throw std::runtime_error("METIS edge count mismatch: header says " + std::to_string(m) +
                                 ", found " + std::to_string(g.num_edges()));
    return g;
}

} // namespace

Graph load_graph(std::istream &in, GraphFormat format) {
    return format == GraphFormat::edgelist ? parse_edgelist(in) : parse_metis(in);
}

Graph load_graph_file(const std::string &path, GraphFormat format) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open graph file: " + path);
    return load_graph(in, format);
}

DistanceVector bfs(const Graph &g, Vertex source) {
    const std::size_t n = g.num_vertices();
    if (source >= n)
        throw std::invalid_argument("bfs source out of range");
    DistanceVector dist(n, kUnreachable);
    std::vector<Vertex> queue;
    queue.reserve(n);
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        const std::uint32_t du = dist[u];
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = du + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

DistanceVector dist_to_set(const Graph &g, const VertexSet &s) {
    if (s.empty())
        throw std::invalid_argument("dist_to_set: empty set");
    const std::size_t n = g.num_vertices();
    DistanceVector dist(n, kUnreachable);
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (Vertex v : s) {
        if (v >= n)
            throw std::invalid_argument("dist_to_set: vertex out of range");
        dist[v] = 0;
        queue.push_back(v);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        const std::uint32_t du = dist[u];
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = du + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::uint64_t group_farness(const Graph &g, const VertexSet &s) {
    const DistanceVector dist = dist_to_set(g, s);
    return kernels::sum_u32(dist.data(), dist.size());
}

Rational group_closeness(const Graph &g, const VertexSet &s) {
    const std::uint64_t f = group_farness(g, s);
    if (f == 0)
        throw std::runtime_error("closeness undefined: group farness is zero");
    return Rational{g.num_vertices() - s.size(), f};
}

Eccentricities eccentricities(const Graph &g) {
    const std::size_t n = g.num_vertices();
    Eccentricities result;
    result.ecc.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        const DistanceVector dist = bfs(g, static_cast<Vertex>(v));
        std::uint32_t e = 0;
        for (std::uint32_t d : dist)
            e = std::max(e, d);
        result.ecc[v] = e;
        result.diameter = std::max(result.diameter, e);
    }
    return result;
}

} // namespace gccm
