#include <gccm/ilp.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gccm {

namespace {

std::string var_name(Vertex v, std::uint32_t level) {
    return "x_" + std::to_string(v) + "_" + std::to_string(level);
}

} // namespace

std::string export_lp(const IlpModel &model) {
    std::ostringstream out;
    out << "Minimize\n obj:";
    bool first = true;
    for (std::size_t mi = 0; mi < model.modeled.size(); ++mi) {
        const Vertex v = model.modeled[mi];
        for (std::uint32_t i = model.isCenter[mi] ? 0 : 1; i <= model.levelCap[mi]; ++i) {
            const std::int64_t c = model.cost(mi, i);
            if (c == 0)
                continue;
            out << (first ? " " : " + ");
            if (c != 1)
                out << c << " ";
            out << var_name(v, i);
            first = false;
        }
    }
    if (first)
        out << " 0 " << var_name(model.centers.front(), 0);
    out << "\nSubject To\n";

    out << " k_sum:";
    for (std::size_t ci = 0; ci < model.centers.size(); ++ci)
        out << (ci == 0 ? " " : " + ") << var_name(model.centers[ci], 0);
    out << " = " << model.k << "\n";

    for (std::size_t mi = 0; mi < model.modeled.size(); ++mi) {
        const Vertex v = model.modeled[mi];
        out << " assign_" << v << ":";
        bool firstTerm = true;
        for (std::uint32_t i = model.isCenter[mi] ? 0 : 1; i <= model.levelCap[mi]; ++i) {
            out << (firstTerm ? " " : " + ") << var_name(v, i);
            firstTerm = false;
        }
        out << " = 1\n";
    }

    // Linking rows for levels strictly below the cap; the top level means
    // "at least this far" and is deliberately unconstrained.
    for (std::size_t mi = 0; mi < model.modeled.size(); ++mi) {
        const Vertex v = model.modeled[mi];
        for (std::uint32_t i = 1; i < model.levelCap[mi]; ++i) {
            out << " link_" << v << "_" << i << ": " << var_name(v, i);
            for (std::size_t ci = 0; ci < model.centers.size(); ++ci)
                if (model.centerDist.row(ci)[mi] == i)
                    out << " - " << var_name(model.centers[ci], 0);
            out << " <= 0\n";
        }
    }

    out << "Binaries\n";
    for (std::size_t mi = 0; mi < model.modeled.size(); ++mi) {
        const Vertex v = model.modeled[mi];
        for (std::uint32_t i = model.isCenter[mi] ? 0 : 1; i <= model.levelCap[mi]; ++i)
            out << " " << var_name(v, i) << "\n";
    }
    out << "End\n";
    return out.str();
}

namespace {

struct VarRef {
    Vertex v;
    std::uint32_t level;
};

VarRef parse_var(const std::string &token) {
    if (token.size() < 5 || token[0] != 'x' || token[1] != '_')
        throw std::runtime_error("unrecognized variable name: '" + token + "'");
    const std::size_t second = token.find('_', 2);
    if (second == std::string::npos)
        throw std::runtime_error("unrecognized variable name: '" + token + "'");
    return {static_cast<Vertex>(std::stoul(token.substr(2, second - 2))),
            static_cast<std::uint32_t>(std::stoul(token.substr(second + 1)))};
}

struct Term {
    std::int64_t coefficient;
    VarRef var;
};

struct ParsedRow {
    std::string name;
    std::vector<Term> terms;
    char relation; // '=' or '<'
    std::int64_t rhs;
};

// Tokenizes one linear expression: [sign] [number] var ...
std::vector<Term> parse_terms(std::istringstream &in, std::string &pending) {
    std::vector<Term> terms;
    std::int64_t sign = 1;
    std::int64_t coef = 1;
    std::string tok;
    auto take = [&]() {
        if (!pending.empty()) {
            tok = std::exchange(pending, std::string{});
            return true;
        }
        return static_cast<bool>(in >> tok);
    };
    while (take()) {
        if (tok == "+") {
            sign = 1;
        } else if (tok == "-") {
            sign = -1;
        } else if (tok == "<=" || tok == ">=" || tok == "=") {
            pending = tok;
            break;
        } else if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
            coef = std::stoll(tok);
        } else {
            terms.push_back({sign * coef, parse_var(tok)});
            sign = 1;
            coef = 1;
        }
    }
    return terms;
}

} // namespace

IlpModel parse_lp(const std::string &text) {
    // Strip comments, collect section bodies.
    std::istringstream lines(text);
    std::string line, section;
    std::vector<Term> objective;
    std::vector<ParsedRow> rows;
    std::vector<VarRef> binaries;

    auto lowered = [](std::string s) {
        std::transform(s.begin(), s.end(), s.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        return s;
    };

    std::string constraintBuffer;
    auto flushConstraint = [&]() {
        if (constraintBuffer.empty())
            return;
        const std::size_t colon = constraintBuffer.find(':');
        if (colon == std::string::npos)
            throw std::runtime_error("constraint row without a name: '" + constraintBuffer + "'");
        ParsedRow row;
        row.name = constraintBuffer.substr(0, colon);
        row.name.erase(0, row.name.find_first_not_of(" \t"));
        std::istringstream body(constraintBuffer.substr(colon + 1));
        std::string pending;
        row.terms = parse_terms(body, pending);
        if (pending.empty())
            throw std::runtime_error("constraint row without a relation: '" + row.name + "'");
        row.relation = pending == "=" ? '=' : '<';
        if (pending == ">=")
            throw std::runtime_error("unsupported relation in row '" + row.name + "'");
        if (!(body >> row.rhs))
            throw std::runtime_error("constraint row without a right-hand side: '" + row.name + "'");
        rows.push_back(std::move(row));
        constraintBuffer.clear();
    };

    while (std::getline(lines, line)) {
        const std::size_t comment = line.find('\\');
        if (comment != std::string::npos)
            line.erase(comment);
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
        trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
        if (trimmed.empty())
            continue;
        const std::string low = lowered(trimmed);
        if (low == "minimize" || low == "subject to" || low == "binaries" || low == "end" ||
            low == "bounds" || low == "generals") {
            flushConstraint();
            section = low;
            continue;
        }
        if (section == "minimize") {
            std::string body = trimmed;
            const std::size_t colon = body.find(':');
            if (colon != std::string::npos)
                body.erase(0, colon + 1);
            std::istringstream in(body);
            std::string pending;
            for (Term &t : parse_terms(in, pending))
                objective.push_back(t);
        } else if (section == "subject to") {
            // Rows may wrap; a new row starts when a name with ':' appears.
            if (trimmed.find(':') != std::string::npos)
                flushConstraint();
            constraintBuffer += (constraintBuffer.empty() ? "" : " ") + trimmed;
        } else if (section == "binaries") {
            std::istringstream in(trimmed);
            std::string tok;
            while (in >> tok)
                binaries.push_back(parse_var(tok));
        }
    }
    flushConstraint();
    if (binaries.empty())
        throw std::runtime_error("LP text declares no binary variables");

    // Rebuild the model skeleton from the variable names.
    std::map<Vertex, std::uint32_t> capOf;
    std::map<Vertex, bool> hasLevel0;
    for (const VarRef &var : binaries) {
        auto [it, inserted] = capOf.try_emplace(var.v, var.level);
        if (!inserted)
            it->second = std::max(it->second, var.level);
        auto [it0, inserted0] = hasLevel0.try_emplace(var.v, var.level == 0);
        if (!inserted0)
            it0->second = it0->second || var.level == 0;
    }

    IlpModel model;
    for (auto &[v, cap] : capOf) {
        model.modeled.push_back(v);
        model.levelCap.push_back(cap);
        model.alpha.push_back(0);
        model.isCenter.push_back(hasLevel0[v] ? 1 : 0);
        if (hasLevel0[v])
            model.centers.push_back(v);
    }
    model.n = model.modeled.empty() ? 0 : model.modeled.back() + 1;

    // Objective coefficients, zero by default.
    std::vector<std::vector<std::int64_t>> cost(model.modeled.size());
    for (std::size_t mi = 0; mi < model.modeled.size(); ++mi)
        cost[mi].assign(model.levelCap[mi] + 1, 0);
    for (const Term &t : objective) {
        const std::size_t mi = model.modeled_index(t.var.v);
        if (t.coefficient < 0)
            throw std::runtime_error("negative objective coefficients are not supported");
        cost[mi][t.var.level] = t.coefficient;
    }
    for (std::size_t mi = 0; mi < model.modeled.size(); ++mi) {
        for (std::uint32_t i = model.isCenter[mi] ? 1 : 2; i <= model.levelCap[mi]; ++i)
            if (cost[mi][i] < cost[mi][i - 1])
                throw std::runtime_error("objective coefficients must not decrease with the level");
    }
    model.explicitCost = std::move(cost);

    // Distances, truncated at the cap: link_v_i pins every listed center to
    // distance i; anything never listed is at least the cap.
    model.centerDist.rows = model.centers.size();
    model.centerDist.width = model.modeled.size();
    model.centerDist.values.resize(model.centerDist.rows * model.centerDist.width);
    std::map<Vertex, std::size_t> centerIndex;
    for (std::size_t ci = 0; ci < model.centers.size(); ++ci)
        centerIndex[model.centers[ci]] = ci;
    for (std::size_t ci = 0; ci < model.centers.size(); ++ci) {
        std::uint32_t *row = model.centerDist.values.data() + ci * model.centerDist.width;
        for (std::size_t mi = 0; mi < model.modeled.size(); ++mi)
            row[mi] = model.centers[ci] == model.modeled[mi] ? 0 : model.levelCap[mi];
    }

    bool sawKSum = false;
    for (const ParsedRow &row : rows) {
        if (row.name == "k_sum") {
            sawKSum = true;
            if (row.relation != '=')
                throw std::runtime_error("k_sum must be an equality");
            model.k = static_cast<std::uint32_t>(row.rhs);
        } else if (row.name.rfind("link_", 0) == 0) {
            // link_<v>_<i>: x_v_i - sum of centers at distance i <= 0
            const std::size_t second = row.name.find('_', 5);
            const Vertex v = static_cast<Vertex>(std::stoul(row.name.substr(5, second - 5)));
            const std::uint32_t level = static_cast<std::uint32_t>(std::stoul(row.name.substr(second + 1)));
            const std::size_t mi = model.modeled_index(v);
            for (const Term &t : row.terms) {
                if (t.coefficient >= 0)
                    continue; // the x_v_i term itself
                const auto it = centerIndex.find(t.var.v);
                if (it == centerIndex.end())
                    throw std::runtime_error("link row references unknown center in '" + row.name + "'");
                model.centerDist.values[it->second * model.centerDist.width + mi] = level;
            }
        }
        // assign rows are implied by the variable layout
    }
    if (!sawKSum)
        throw std::runtime_error("LP text has no k_sum row");
    if (model.k == 0 || model.centers.size() < model.k)
        throw std::runtime_error("LP text has fewer centers than k");
    return model;
}

BackendResult import_solution(const std::string &text, const IlpModel &model) {
    std::istringstream lines(text);
    std::string line;
    constexpr std::uint32_t kNoLevel = 0xFFFFFFFFu;
    std::vector<std::uint32_t> levels(model.modeled.size(), kNoLevel);

    while (std::getline(lines, line)) {
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#')
            continue;
        std::istringstream ls(line);
        std::string name;
        double value;
        if (!(ls >> name >> value))
            throw std::runtime_error("malformed solution line: '" + line + "'");
        const VarRef var = parse_var(name);
        std::uint32_t rounded;
        if (std::abs(value) <= 1e-6) {
            rounded = 0;
        } else if (std::abs(value - 1.0) <= 1e-6) {
            rounded = 1;
        } else {
            throw std::runtime_error("variable " + name + " has non-binary value " +
                                     std::to_string(value));
        }
        const std::size_t mi = model.modeled_index(var.v);
        if (var.level > model.levelCap[mi] || (var.level == 0 && !model.isCenter[mi]))
            throw std::runtime_error("solution references nonexistent variable " + name);
        if (rounded == 1) {
            if (levels[mi] != kNoLevel)
                throw std::runtime_error("assign_" + std::to_string(var.v) +
                                         " violated: two active levels");
            levels[mi] = var.level;
        }
    }

    BackendResult result;
    result.levels.resize(model.modeled.size());
    std::vector<Vertex> selected;
    for (std::size_t mi = 0; mi < model.modeled.size(); ++mi) {
        if (levels[mi] == kNoLevel)
            throw std::runtime_error("assign_" + std::to_string(model.modeled[mi]) +
                                     " violated: no active level");
        result.levels[mi] = levels[mi];
        if (levels[mi] == 0)
            selected.push_back(model.modeled[mi]);
    }
    result.selected = VertexSet(std::move(selected));
    if (result.selected.size() != model.k)
        throw std::runtime_error("k_sum violated: " + std::to_string(result.selected.size()) +
                                 " centers selected, expected " + std::to_string(model.k));

    // Linking feasibility for active levels below the cap.
    std::vector<std::size_t> selectedCenterIdx;
    for (std::size_t ci = 0; ci < model.centers.size(); ++ci)
        if (result.selected.contains(model.centers[ci]))
            selectedCenterIdx.push_back(ci);
    for (std::size_t mi = 0; mi < model.modeled.size(); ++mi) {
        const std::uint32_t level = result.levels[mi];
        if (level == 0 || level >= model.levelCap[mi])
            continue;
        bool linked = false;
        for (std::size_t ci : selectedCenterIdx)
            if (model.centerDist.row(ci)[mi] == level) {
                linked = true;
                break;
            }
        if (!linked)
            throw std::runtime_error("link_" + std::to_string(model.modeled[mi]) + "_" +
                                     std::to_string(level) + " violated");
    }

    for (std::size_t mi = 0; mi < model.modeled.size(); ++mi)
        result.objective += model.cost(mi, result.levels[mi]);
    result.status = BackendStatus::optimal;
    return result;
}

BackendResult external_backend_solve(const IlpModel &model, const std::string &commandTemplate) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path();
    const auto tag = std::to_string(
        std::chrono::steady_clock::now().time_since_epoch().count());
    const fs::path lpPath = dir / ("gccm_" + tag + ".lp");
    const fs::path solPath = dir / ("gccm_" + tag + ".sol");

    {
        std::ofstream out(lpPath);
        out << export_lp(model);
    }

    std::string command = commandTemplate;
    auto replaceAll = [](std::string &s, const std::string &from, const std::string &to) {
        for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos))
            s.replace(pos, from.size(), to), pos += to.size();
    };
    replaceAll(command, "{lp}", lpPath.string());
    replaceAll(command, "{sol}", solPath.string());

    const int rc = std::system(command.c_str());
    if (rc != 0) {
        fs::remove(lpPath);
        fs::remove(solPath);
        throw std::runtime_error("external solver failed with exit status " + std::to_string(rc));
    }

    std::ifstream in(solPath);
    if (!in)
        throw std::runtime_error("external solver produced no solution file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    fs::remove(lpPath);
    fs::remove(solPath);
    return import_solution(buffer.str(), model);
}

} // namespace gccm
