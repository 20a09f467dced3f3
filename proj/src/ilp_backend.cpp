#include <gccm/ilp.hpp>

#include <gccm/kernels.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace gccm {

namespace {

// Once the centers S are fixed, every modeled vertex is forced to its
// cheapest feasible level min(dist(v,S), cap(v)); costs are non-decreasing
// in the level, so cost and min commute. The whole model therefore collapses
// to minimizing sum_v R[s][v] mins over k-subsets of center rows.
RowMatrix cost_rows(const IlpModel &model) {
    RowMatrix r;
    r.rows = model.centers.size();
    r.width = model.modeled.size();
    r.values.resize(r.rows * r.width);
    for (std::size_t ci = 0; ci < r.rows; ++ci) {
        const auto dist = model.centerDist.row(ci);
        std::uint32_t *out = r.values.data() + ci * r.width;
        for (std::size_t mi = 0; mi < r.width; ++mi) {
            const std::uint32_t level = std::min(dist[mi], model.levelCap[mi]);
            const std::int64_t c = model.cost(mi, level);
            if (c < 0 || c > std::numeric_limits<std::uint32_t>::max())
                throw std::runtime_error("objective coefficient out of supported range");
            out[mi] = static_cast<std::uint32_t>(c);
        }
    }
    return r;
}

} // namespace

BackendResult builtin_backend_solve(const IlpModel &model, Deadline deadline) {
    const RowMatrix rows = cost_rows(model);

    RowSubsetResult sub;
    if (model.kind == ModelKind::bergamini) {
        sub = enumerate_min_sum(rows, model.k);
    } else {
        BranchAndBoundOptions opts;
        opts.deadline = deadline;
        sub = branch_and_bound_min_sum(rows, model.k, opts);
    }

    BackendResult result;
    result.status = sub.status == ExactStatus::optimal ? BackendStatus::optimal : BackendStatus::timeout;
    result.nodes = sub.nodes;
    if (result.status == BackendStatus::timeout)
        return result;

    result.objective = static_cast<std::int64_t>(sub.objective);
    std::vector<Vertex> chosen;
    chosen.reserve(sub.chosen.size());
    for (std::uint32_t ci : sub.chosen)
        chosen.push_back(model.centers[ci]);
    result.selected = VertexSet(std::move(chosen));

    result.levels.resize(model.modeled.size());
    for (std::size_t mi = 0; mi < model.modeled.size(); ++mi) {
        std::uint32_t level = model.levelCap[mi];
        for (std::uint32_t ci : sub.chosen)
            level = std::min(level, model.centerDist.row(ci)[mi]);
        result.levels[mi] = level;
    }
    return result;
}

} // namespace gccm
