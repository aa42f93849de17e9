#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fdscan/attribute_set.hpp"
#include "fdscan/discovery.hpp"
#include "fdscan/relation.hpp"

namespace fdscan {

/// A dependency with attribute indices resolved to names.
struct ReportFd {
    std::vector<std::string> lhs;
    std::string rhs;
};

/// One decoded witness row: 1-based enumeration index plus the (attribute,
/// value) pairs the refutation rests on.
struct ReportWitnessRow {
    std::uint32_t row = 0;
    std::vector<std::pair<std::string, std::string>> values;
};

/// Self-contained result of one CLI invocation. Exactly the sections matching
/// the invoked command are populated. Serialized field order is fixed; timing
/// is reported on stderr only so repeated runs stay byte-identical on stdout.
struct RunReport {
    std::string command;  // matrix | discover | keys | check
    std::string version;

    // input metadata
    std::string input_path;
    std::size_t rows = 0;
    std::size_t columns = 0;
    std::vector<std::string> attributes;

    // options echoed into the report
    char delimiter = ',';
    bool has_header = true;
    bool trim = true;
    bool fold_case = false;
    std::optional<std::size_t> max_lhs;  // discover / keys
    bool verify = false;

    // results
    std::optional<std::vector<std::vector<int>>> matrix;  // rows = determined
    std::optional<std::vector<ReportFd>> fds;
    std::optional<std::vector<std::vector<std::string>>> keys;
    std::optional<ReportFd> checked;
    std::optional<bool> check_holds;
    std::vector<ReportWitnessRow> witness_rows;  // populated when a check fails

    double timing_ms = 0.0;  // never serialized to stdout
};

RunReport make_matrix_report(const Relation& relation, const std::string& path,
                             const DependencyMatrix& matrix);
RunReport make_discover_report(const Relation& relation, const std::string& path,
                               const std::vector<FunctionalDependency>& fds,
                               const std::optional<std::vector<AttributeSet>>& keys,
                               std::size_t max_lhs);
RunReport make_keys_report(const Relation& relation, const std::string& path,
                           const std::vector<AttributeSet>& keys, std::size_t max_size);
RunReport make_check_report(const Relation& relation, const std::string& path,
                            const FunctionalDependency& fd);

/// Render the report as aligned text. The matrix section lists determinants
/// as columns and determined attributes as rows with 0/1 cells.
std::string render_text(const RunReport& report);

/// Render the report as JSON (schema documented in the README). Field order
/// is deterministic; output ends with a newline.
std::string render_json(const RunReport& report);

struct FdExpression {
    AttributeSet lhs;
    std::uint32_t rhs = 0;
};

/// Parse "LHS1,LHS2,...->RHS" against the relation's header. Names match
/// case-sensitively after surrounding-whitespace trim. Throws
/// std::invalid_argument on malformed input, unknown names, or rhs in lhs.
FdExpression parse_fd_expression(std::string_view expression, const Relation& relation);

}  // namespace fdscan
