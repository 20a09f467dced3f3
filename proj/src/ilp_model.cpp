#include <gccm/ilp.hpp>

#include <algorithm>
#include <stdexcept>

namespace gccm {

std::int64_t IlpModel::cost(std::size_t mi, std::uint32_t level) const {
    if (explicitCost)
        return (*explicitCost)[mi][level];
    if (kind == ModelKind::reduced)
        return static_cast<std::int64_t>(alpha[mi]) * (level + 1) + level;
    return level;
}

std::size_t IlpModel::variable_count() const {
    std::size_t count = 0;
    for (std::size_t mi = 0; mi < modeled.size(); ++mi) {
        count += levelCap[mi] + 1;
        if (!isCenter[mi])
            --count; // no level-0 variable
    }
    return count;
}

std::size_t IlpModel::modeled_index(Vertex v) const {
    const auto it = std::lower_bound(modeled.begin(), modeled.end(), v);
    if (it == modeled.end() || *it != v)
        throw std::invalid_argument("vertex has no variables in this model");
    return static_cast<std::size_t>(it - modeled.begin());
}

std::vector<Vertex> IlpModel::centers_at_distance(Vertex v, std::uint32_t i) const {
    const std::size_t mi = modeled_index(v);
    std::vector<Vertex> out;
    for (std::size_t ci = 0; ci < centers.size(); ++ci)
        if (centerDist.row(ci)[mi] == i)
            out.push_back(centers[ci]);
    return out;
}

namespace {

void validate_caps(const std::vector<std::uint32_t> &dMap, const DistanceVector &ecc,
                   std::size_t n) {
    if (dMap.size() != n)
        throw std::invalid_argument("dMap size mismatch");
    for (std::size_t v = 0; v < n; ++v) {
        if (dMap[v] > ecc[v])
            throw std::invalid_argument("dMap exceeds eccentricity at vertex " + std::to_string(v));
        if (dMap[v] < 2 && dMap[v] != ecc[v])
            throw std::invalid_argument("dMap below 2 without hitting eccentricity at vertex " +
                                        std::to_string(v));
    }
}

RowMatrix center_rows(const Graph &g, const std::vector<Vertex> &centers,
                      const std::vector<Vertex> &modeled) {
    RowMatrix m;
    m.rows = centers.size();
    m.width = modeled.size();
    m.values.resize(m.rows * m.width);
    for (std::size_t ci = 0; ci < centers.size(); ++ci) {
        const DistanceVector d = bfs(g, centers[ci]);
        std::uint32_t *row = m.values.data() + ci * m.width;
        for (std::size_t mi = 0; mi < modeled.size(); ++mi)
            row[mi] = d[modeled[mi]];
    }
    return m;
}

IlpModel build_model(const Graph &g, std::uint32_t k, ModelKind kind,
                     const std::vector<std::uint32_t> &dMap, const VertexSet &dominated,
                     const VertexSet &absorbed, const std::vector<std::uint32_t> *alphaByVertex,
                     const DistanceVector *eccHint) {
    const std::size_t n = g.num_vertices();
    if (eccHint) {
        validate_caps(dMap, *eccHint, n);
    } else {
        validate_caps(dMap, eccentricities(g).ecc, n);
    }

    IlpModel model;
    model.kind = kind;
    model.k = k;
    model.n = n;
    model.centers = complement(dominated, n).members();
    if (model.centers.size() < k)
        throw std::invalid_argument("fewer than k selectable vertices remain");
    model.modeled = complement(absorbed, n).members();

    model.levelCap.reserve(model.modeled.size());
    model.alpha.reserve(model.modeled.size());
    model.isCenter.reserve(model.modeled.size());
    for (Vertex v : model.modeled) {
        model.levelCap.push_back(dMap[v]);
        model.alpha.push_back(alphaByVertex ? (*alphaByVertex)[v] : 0);
        model.isCenter.push_back(dominated.contains(v) ? 0 : 1);
    }
    model.centerDist = center_rows(g, model.centers, model.modeled);
    return model;
}

} // namespace

IlpModel build_full_model(const Graph &g, std::uint32_t k, const std::vector<std::uint32_t> &dMap,
                          const VertexSet &dominated, const DistanceVector *eccHint) {
    return build_model(g, k, ModelKind::full, dMap, dominated, VertexSet{}, nullptr, eccHint);
}

IlpModel build_reduced_model(const Graph &g, std::uint32_t k, const std::vector<std::uint32_t> &dMap,
                             const ReductionResult &reduction, const DistanceVector *eccHint) {
    return build_model(g, k, ModelKind::reduced, dMap, reduction.dominated, reduction.absorbed,
                       &reduction.alpha, eccHint);
}

IlpModel build_bergamini_model(const Graph &g, std::uint32_t k) {
    const std::size_t n = g.num_vertices();
    if (n > 200)
        throw std::invalid_argument("bergamini cross-check model is limited to n <= 200");
    if (k > n)
        throw std::invalid_argument("k exceeds vertex count");
    const Eccentricities ecc = eccentricities(g);
    return build_model(g, k, ModelKind::bergamini, ecc.ecc, VertexSet{}, VertexSet{}, nullptr,
                       &ecc.ecc);
}

std::vector<std::uint32_t> estimate_d(const Graph &g, const VertexSet &approx,
                                      const DistanceVector &ecc) {
    if (approx.empty())
        throw std::invalid_argument("estimate_d: empty approximate solution");
    const DistanceVector dist = dist_to_set(g, approx);
    std::vector<std::uint32_t> dMap(g.num_vertices());
    for (std::size_t v = 0; v < dMap.size(); ++v)
        dMap[v] = std::min(ecc[v], std::max(dist[v] + 1, 2u));
    return dMap;
}

std::vector<Vertex> check_sufficiency(const BackendResult &result, const IlpModel &model,
                                      const DistanceVector &ecc) {
    std::vector<Vertex> insufficient;
    for (std::size_t mi = 0; mi < model.modeled.size(); ++mi) {
        const Vertex v = model.modeled[mi];
        if (result.levels[mi] == model.levelCap[mi] && model.levelCap[mi] < ecc[v])
            insufficient.push_back(v);
    }
    return insufficient;
}

FullAssignment reconstruct_full_assignment(const BackendResult &reduced, const IlpModel &reducedModel,
                                           const ReductionResult &reduction) {
    const std::size_t n = reducedModel.n;
    FullAssignment fa;
    fa.levels.resize(n);
    fa.dMap.resize(n);
    for (std::size_t mi = 0; mi < reducedModel.modeled.size(); ++mi) {
        const Vertex v = reducedModel.modeled[mi];
        fa.levels[v] = reduced.levels[mi];
        fa.dMap[v] = reducedModel.levelCap[mi];
    }
    for (Vertex v : reduction.absorbed) {
        const Vertex absorber = reduction.rho[v];
        const std::size_t ri = reducedModel.modeled_index(absorber);
        fa.levels[v] = reduced.levels[ri] + 1;
        fa.dMap[v] = reducedModel.levelCap[ri] + 1;
    }
    for (std::uint32_t level : fa.levels)
        fa.objective += level;
    return fa;
}

bool verify_full_assignment(const Graph &g, const VertexSet &dominated, std::uint32_t k,
                            const FullAssignment &fa, const VertexSet &selected,
                            std::string *reason) {
    const std::size_t n = g.num_vertices();
    auto fail = [&](const std::string &why) {
        if (reason)
            *reason = why;
        return false;
    };
    if (selected.size() != k)
        return fail("k_sum");
    for (Vertex v : selected)
        if (dominated.contains(v))
            return fail("k_sum: selected vertex is dominated");

    for (std::size_t v = 0; v < n; ++v) {
        if (fa.levels[v] > fa.dMap[v])
            return fail("assign_" + std::to_string(v) + ": level above cap");
        const bool selectedHere = selected.contains(static_cast<Vertex>(v));
        if (selectedHere != (fa.levels[v] == 0))
            return fail("assign_" + std::to_string(v));
        if (dominated.contains(static_cast<Vertex>(v)) && fa.levels[v] == 0)
            return fail("assign_" + std::to_string(v) + ": dominated vertex at level 0");
    }

    // Linking rows: an active level below the cap needs a selected center at
    // exactly that distance. The top level is the relaxed "at least" variable.
    std::vector<DistanceVector> rows;
    rows.reserve(selected.size());
    for (Vertex s : selected)
        rows.push_back(bfs(g, s));
    for (std::size_t v = 0; v < n; ++v) {
        const std::uint32_t level = fa.levels[v];
        if (level == 0 || level >= fa.dMap[v])
            continue;
        bool linked = false;
        for (const DistanceVector &row : rows)
            if (row[v] == level) {
                linked = true;
                break;
            }
        if (!linked)
            return fail("link_" + std::to_string(v) + "_" + std::to_string(level));
    }
    return true;
}

} // namespace gccm
