#include <gccm/report.hpp>

#include <stdexcept>

namespace gccm {

nlohmann::json to_json(const SolveReport &r) {
    nlohmann::json j;
    j["schemaVersion"] = 1;
    j["graph"] = r.graphName;
    j["n"] = r.n;
    j["m"] = r.m;
    j["k"] = r.k;
    j["mode"] = r.mode;
    j["status"] = r.status;
    j["solution"] = r.solutionLabels;
    if (r.farness)
        j["farness"] = *r.farness;
    else
        j["farness"] = nullptr;
    if (r.closeness)
        j["closeness"] = *r.closeness;
    else
        j["closeness"] = nullptr;
    j["iterations"] = r.iterations;
    j["variableCounts"] = r.variableCounts;
    j["reduction"] = {{"dominated", r.dominatedCount}, {"absorbed", r.absorbedCount}};
    j["timings"] = {{"reductionMs", r.reductionMs},
                    {"heuristicMs", r.heuristicMs},
                    {"ilpMs", r.ilpMs},
                    {"totalMs", r.totalMs}};
    return j;
}

SolveReport make_report(const Graph &g, const std::string &graphName, std::uint32_t k,
                        const std::string &mode, const std::string &status, const VertexSet &solution,
                        std::optional<std::uint64_t> claimedFarness) {
    SolveReport report;
    report.graphName = graphName;
    report.n = g.num_vertices();
    report.m = g.num_edges();
    report.k = k;
    report.mode = mode;
    report.status = status;
    if (!solution.empty()) {
        const std::uint64_t recomputed = group_farness(g, solution);
        if (claimedFarness && *claimedFarness != recomputed)
            throw std::logic_error("reported farness " + std::to_string(*claimedFarness) +
                                   " disagrees with recomputation " + std::to_string(recomputed));
        report.farness = recomputed;
        if (recomputed > 0)
            report.closeness = group_closeness(g, solution).str();
        for (Vertex v : solution)
            report.solutionLabels.push_back(g.label(v));
    }
    return report;
}

namespace {

bool type_matches(const std::string &type, const nlohmann::json &value) {
    if (type == "object")
        return value.is_object();
    if (type == "array")
        return value.is_array();
    if (type == "string")
        return value.is_string();
    if (type == "integer")
        return value.is_number_integer() || value.is_number_unsigned();
    if (type == "number")
        return value.is_number();
    if (type == "boolean")
        return value.is_boolean();
    if (type == "null")
        return value.is_null();
    return false;
}

void validate_node(const nlohmann::json &schema, const nlohmann::json &value, const std::string &path,
                   std::vector<std::string> &errors) {
    if (schema.contains("type")) {
        const auto &type = schema["type"];
        bool ok = false;
        if (type.is_string()) {
            ok = type_matches(type.get<std::string>(), value);
        } else {
            for (const auto &t : type)
                ok = ok || type_matches(t.get<std::string>(), value);
        }
        if (!ok) {
            errors.push_back(path + ": type mismatch");
            return;
        }
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto &allowed : schema["enum"])
            ok = ok || allowed == value;
        if (!ok)
            errors.push_back(path + ": value not in enum");
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto &key : schema["required"])
                if (!value.contains(key.get<std::string>()))
                    errors.push_back(path + ": missing required field '" + key.get<std::string>() + "'");
        if (schema.contains("properties"))
            for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
                if (value.contains(it.key()))
                    validate_node(it.value(), value[it.key()], path + "/" + it.key(), errors);
    }
    if (value.is_array() && schema.contains("items")) {
        std::size_t idx = 0;
        for (const auto &element : value)
            validate_node(schema["items"], element, path + "[" + std::to_string(idx++) + "]", errors);
    }
}

} // namespace

std::vector<std::string> validate_schema(const nlohmann::json &schema, const nlohmann::json &instance) {
    std::vector<std::string> errors;
    validate_node(schema, instance, "", errors);
    return errors;
}

} // namespace gccm
