#include "fdscan/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "fdscan/version.hpp"
#include "json.hpp"

namespace fdscan {

namespace {

RunReport base_report(const Relation& relation, const std::string& path,
                      std::string command) {
    RunReport report;
    report.command = std::move(command);
    report.version = k_version;
    report.input_path = path;
    report.rows = relation.row_count();
    report.columns = relation.column_count();
    report.attributes = relation.column_names();
    return report;
}

std::vector<std::string> resolve_names(const Relation& relation, const AttributeSet& attrs) {
    std::vector<std::string> names;
    names.reserve(attrs.size());
    for (const std::uint32_t a : attrs.members()) names.push_back(relation.column_names()[a]);
    return names;
}

ReportFd resolve_fd(const Relation& relation, const FunctionalDependency& fd) {
    return {resolve_names(relation, fd.lhs), relation.column_names()[fd.rhs]};
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += sep;
        out += parts[i];
    }
    return out;
}

void append_witness_rows(RunReport& report, const Relation& relation,
                         const FunctionalDependency& fd) {
    if (!fd.witness) return;
    for (const std::uint32_t row_1based : {fd.witness->row_a, fd.witness->row_b}) {
        ReportWitnessRow row;
        row.row = row_1based;
        const std::size_t row0 = row_1based - 1;
        for (const std::uint32_t a : fd.lhs.members())
            row.values.emplace_back(relation.column_names()[a], relation.value(row0, a));
        row.values.emplace_back(relation.column_names()[fd.rhs], relation.value(row0, fd.rhs));
        report.witness_rows.push_back(std::move(row));
    }
}

}  // namespace

RunReport make_matrix_report(const Relation& relation, const std::string& path,
                             const DependencyMatrix& matrix) {
    RunReport report = base_report(relation, path, "matrix");
    std::vector<std::vector<int>> cells(matrix.size(), std::vector<int>(matrix.size(), 0));
    for (std::size_t r = 0; r < matrix.size(); ++r)
        for (std::size_t c = 0; c < matrix.size(); ++c) cells[r][c] = matrix.at(r, c) ? 1 : 0;
    report.matrix = std::move(cells);
    return report;
}

RunReport make_discover_report(const Relation& relation, const std::string& path,
                               const std::vector<FunctionalDependency>& fds,
                               const std::optional<std::vector<AttributeSet>>& keys,
                               std::size_t max_lhs) {
    RunReport report = base_report(relation, path, "discover");
    report.max_lhs = max_lhs;
    std::vector<ReportFd> resolved;
    resolved.reserve(fds.size());
    for (const auto& fd : fds) resolved.push_back(resolve_fd(relation, fd));
    report.fds = std::move(resolved);
    if (keys) {
        std::vector<std::vector<std::string>> key_names;
        key_names.reserve(keys->size());
        for (const auto& key : *keys) key_names.push_back(resolve_names(relation, key));
        report.keys = std::move(key_names);
    }
    return report;
}

RunReport make_keys_report(const Relation& relation, const std::string& path,
                           const std::vector<AttributeSet>& keys, std::size_t max_size) {
    RunReport report = base_report(relation, path, "keys");
    report.max_lhs = max_size;
    std::vector<std::vector<std::string>> key_names;
    key_names.reserve(keys.size());
    for (const auto& key : keys) key_names.push_back(resolve_names(relation, key));
    report.keys = std::move(key_names);
    return report;
}

RunReport make_check_report(const Relation& relation, const std::string& path,
                            const FunctionalDependency& fd) {
    RunReport report = base_report(relation, path, "check");
    report.checked = resolve_fd(relation, fd);
    report.check_holds = fd.holds;
    append_witness_rows(report, relation, fd);
    return report;
}

std::string render_text(const RunReport& report) {
    std::ostringstream out;
    out << "input: " << report.input_path << " (" << report.rows << " rows, "
        << report.columns << " attributes)\n";

    if (report.matrix) {
        out << '\n';
        const auto& matrix = *report.matrix;
        const auto& names = report.attributes;
        const std::string corner = "ATTRIBUTES";
        std::size_t first_width = corner.size();
        for (const auto& name : names) first_width = std::max(first_width, name.size());
        out << corner << std::string(first_width - corner.size(), ' ');
        for (const auto& name : names) out << "  " << name;
        out << '\n';
        for (std::size_t r = 0; r < matrix.size(); ++r) {
            out << names[r] << std::string(first_width - names[r].size(), ' ');
            for (std::size_t c = 0; c < matrix[r].size(); ++c) {
                const std::size_t width = std::max<std::size_t>(names[c].size(), 1);
                out << "  " << std::string(width - 1, ' ') << matrix[r][c];
            }
            out << '\n';
        }
    }

    if (report.fds) {
        out << '\n';
        out << "minimal functional dependencies (max lhs size " << *report.max_lhs << "): "
            << report.fds->size() << '\n';
        for (const auto& fd : *report.fds) out << "  " << join(fd.lhs, ",") << " -> " << fd.rhs << '\n';
    }

    if (report.keys) {
        out << '\n';
        if (report.keys->empty()) {
            out << "no candidate keys\n";
        } else {
            out << "candidate keys: " << report.keys->size() << '\n';
            for (const auto& key : *report.keys) out << "  " << join(key, ",") << '\n';
        }
    }

    if (report.checked) {
        out << '\n';
        out << join(report.checked->lhs, ",") << " -> " << report.checked->rhs << ": "
            << (*report.check_holds ? "HOLDS" : "FAILS") << '\n';
        if (!report.witness_rows.empty()) {
            out << "witness: rows " << report.witness_rows[0].row << " and "
                << report.witness_rows[1].row << '\n';
            for (const auto& row : report.witness_rows) {
                out << "  row " << row.row << ":";
                for (std::size_t i = 0; i < row.values.size(); ++i)
                    out << (i == 0 ? " " : ", ") << row.values[i].first << '='
                        << row.values[i].second;
                out << '\n';
            }
        }
    }

    if (report.verify) out << "\nverification: ok\n";
    return out.str();
}

std::string render_json(const RunReport& report) {
    nlohmann::ordered_json doc;
    doc["tool"] = "fdscan";
    doc["version"] = report.version;
    doc["command"] = report.command;
    doc["input"] = {{"path", report.input_path},
                    {"rows", report.rows},
                    {"columns", report.columns},
                    {"attributes", report.attributes}};
    nlohmann::ordered_json options;
    options["delimiter"] = std::string(1, report.delimiter);
    options["has_header"] = report.has_header;
    options["trim"] = report.trim;
    options["fold_case"] = report.fold_case;
    if (report.max_lhs) options["max_lhs"] = *report.max_lhs;
    options["verify"] = report.verify;
    doc["options"] = std::move(options);

    nlohmann::ordered_json results;
    if (report.matrix) results["matrix"] = *report.matrix;
    if (report.fds) {
        nlohmann::ordered_json fds = nlohmann::ordered_json::array();
        for (const auto& fd : *report.fds)
            fds.push_back({{"lhs", fd.lhs}, {"rhs", fd.rhs}});
        results["fds"] = std::move(fds);
    }
    if (report.keys) results["keys"] = *report.keys;
    if (report.checked) {
        results["fd"] = {{"lhs", report.checked->lhs}, {"rhs", report.checked->rhs}};
        results["holds"] = *report.check_holds;
        if (!report.witness_rows.empty()) {
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (const auto& row : report.witness_rows) {
                nlohmann::ordered_json values;
                for (const auto& [attr, value] : row.values) values[attr] = value;
                rows.push_back({{"row", row.row}, {"values", std::move(values)}});
            }
            results["witness"] = std::move(rows);
        }
    }
    if (report.verify) results["verified"] = true;
    doc["results"] = std::move(results);
    return doc.dump(2) + "\n";
}

FdExpression parse_fd_expression(std::string_view expression, const Relation& relation) {
    const auto trim_view = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    const auto resolve = [&](std::string_view name) -> std::uint32_t {
        const auto idx = relation.column_index(name);
        if (!idx)
            throw std::invalid_argument("unknown attribute '" + std::string(name) + "'");
        return static_cast<std::uint32_t>(*idx);
    };

    const std::size_t arrow = expression.find("->");
    if (arrow == std::string_view::npos)
        throw std::invalid_argument("malformed dependency expression (missing '->')");
    if (expression.find("->", arrow + 2) != std::string_view::npos)
        throw std::invalid_argument("malformed dependency expression (multiple '->')");

    const std::string_view rhs_name = trim_view(expression.substr(arrow + 2));
    if (rhs_name.empty())
        throw std::invalid_argument("malformed dependency expression (empty rhs)");

    std::string_view lhs_text = expression.substr(0, arrow);
    std::vector<std::uint32_t> lhs_attrs;
    while (true) {
        const std::size_t comma = lhs_text.find(',');
        const std::string_view token =
            trim_view(comma == std::string_view::npos ? lhs_text : lhs_text.substr(0, comma));
        if (token.empty())
            throw std::invalid_argument("malformed dependency expression (empty lhs attribute)");
        lhs_attrs.push_back(resolve(token));
        if (comma == std::string_view::npos) break;
        lhs_text.remove_prefix(comma + 1);
    }

    FdExpression parsed;
    parsed.lhs = AttributeSet(std::move(lhs_attrs));
    parsed.rhs = resolve(rhs_name);
    if (parsed.lhs.contains(parsed.rhs))
        throw std::invalid_argument("trivial dependency: rhs '" + std::string(rhs_name) +
                                    "' appears in the lhs");
    return parsed;
}

}  // namespace fdscan
