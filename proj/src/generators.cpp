#include <gccm/generators.hpp>

#include <numeric>
#include <random>
#include <stdexcept>

namespace gccm {

std::pair<Graph, Landmarks> gen_counterexample(std::uint32_t r, std::uint32_t k) {
    if (r < 2)
        throw std::invalid_argument("gen_counterexample: r must be >= 2");
    if (k < 2)
        throw std::invalid_argument("gen_counterexample: k must be >= 2");

    const std::size_t armSize = (r - 1) + static_cast<std::size_t>(r) * r; // path + leaves
    const std::size_t n = 1 + static_cast<std::size_t>(k) * armSize;
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(n - 1);

    Landmarks lm;
    lm.center = 0;
    for (std::uint32_t arm = 0; arm < k; ++arm) {
        const Vertex base = static_cast<Vertex>(1 + arm * armSize);
        // Path of r-1 vertices hanging off the center; its last vertex is e_i.
        Vertex prev = lm.center;
        for (std::uint32_t j = 0; j + 1 < r; ++j) {
            const Vertex cur = base + j;
            edges.emplace_back(prev, cur);
            prev = cur;
        }
        const Vertex endpoint = prev; // = base + r - 2
        lm.endpoints.push_back(endpoint);
        const Vertex leavesBase = base + (r - 1);
        for (std::uint32_t j = 0; j < r * r; ++j)
            edges.emplace_back(endpoint, leavesBase + j);
    }
    return {Graph::from_edges(n, edges), lm};
}

Graph gen_random_connected(std::size_t n, double edgeProbability, std::uint64_t seed) {
    if (n < 2)
        throw std::invalid_argument("gen_random_connected: n must be >= 2");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    auto sample = [&](bool plantTree) {
        std::vector<std::pair<Vertex, Vertex>> edges;
        if (plantTree) {
            // Random recursive tree keeps everything reachable.
            std::uniform_int_distribution<std::size_t> pick(0, n);
            for (std::size_t v = 1; v < n; ++v) {
                std::size_t parent = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
                edges.emplace_back(static_cast<Vertex>(parent), static_cast<Vertex>(v));
            }
        }
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (coin(rng) < edgeProbability)
                    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        return edges;
    };

    constexpr int kRetries = 64;
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        try {
            return Graph::from_edges(n, sample(false));
        } catch (const std::runtime_error &) {
            // disconnected (or empty) sample; try again
        }
    }
    return Graph::from_edges(n, sample(true));
}

Graph gen_named(NamedKind kind, std::size_t a, std::size_t b) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    switch (kind) {
    case NamedKind::path: {
        if (a < 1)
            throw std::invalid_argument("path: need at least one vertex");
        for (std::size_t v = 0; v + 1 < a; ++v)
            edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(v + 1));
        return Graph::from_edges(a, edges);
    }
    case NamedKind::star: {
        if (a < 1)
            throw std::invalid_argument("star: need at least one leaf");
        for (std::size_t v = 1; v <= a; ++v)
            edges.emplace_back(0, static_cast<Vertex>(v));
        return Graph::from_edges(a + 1, edges);
    }
    case NamedKind::cycle: {
        if (a < 3)
            throw std::invalid_argument("cycle: need at least three vertices");
        for (std::size_t v = 0; v < a; ++v)
            edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % a));
        return Graph::from_edges(a, edges);
    }
    case NamedKind::complete: {
        if (a < 2)
            throw std::invalid_argument("complete: need at least two vertices");
        for (std::size_t u = 0; u < a; ++u)
            for (std::size_t v = u + 1; v < a; ++v)
                edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        return Graph::from_edges(a, edges);
    }
    case NamedKind::grid: {
        if (a < 1 || b < 1 || a * b < 2)
            throw std::invalid_argument("grid: need at least two vertices");
        auto id = [&](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * b + c); };
        for (std::size_t r = 0; r < a; ++r) {
            for (std::size_t c = 0; c < b; ++c) {
                if (c + 1 < b)
                    edges.emplace_back(id(r, c), id(r, c + 1));
                if (r + 1 < a)
                    edges.emplace_back(id(r, c), id(r + 1, c));
            }
        }
        return Graph::from_edges(a * b, edges);
    }
    }
    throw std::invalid_argument("gen_named: unknown kind");
}

} // namespace gccm
