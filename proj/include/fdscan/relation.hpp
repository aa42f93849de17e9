#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fdscan {

struct IngestOptions {
    char delimiter = ',';
    bool has_header = true;
    bool trim = true;        // strip ASCII whitespace around each field
    bool fold_case = false;  // lowercase field values (ASCII) before encoding
};

/// Raised on unreadable or malformed input files. `line` is the 1-based
/// physical line of the offending row, 0 when no single line is at fault.
class IngestError : public std::runtime_error {
public:
    explicit IngestError(const std::string& message, std::size_t line = 0)
        : std::runtime_error(message), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct EncodedColumn {
    std::vector<std::uint32_t> codes;      // codes[k] indexes `dictionary`
    std::vector<std::string> dictionary;   // distinct values, first-appearance order
};

/// Dictionary-encode one raw column. The dictionary lists distinct values in
/// order of first appearance; decoding through it reproduces `raw` exactly.
EncodedColumn encode_column(const std::vector<std::string>& raw);

/// Immutable dictionary-encoded columnar table. Row k of the source is
/// enumeration index k; rows are 0-based internally and 1-based in reports.
/// Instances are safe to share across concurrent readers.
class Relation {
public:
    /// Build from already-encoded columns. Validates all invariants: equal
    /// column lengths, dense surjective codes, duplicate-free dictionaries,
    /// unique column names.
    static Relation from_encoded(std::vector<std::string> column_names,
                                 std::vector<std::vector<std::uint32_t>> columns,
                                 std::vector<std::vector<std::string>> dictionaries);

    /// Build from row-major raw string tuples.
    static Relation from_rows(std::vector<std::string> column_names,
                              const std::vector<std::vector<std::string>>& rows);

    std::size_t row_count() const noexcept { return row_count_; }
    std::size_t column_count() const noexcept { return names_.size(); }
    const std::vector<std::string>& column_names() const noexcept { return names_; }

    std::span<const std::uint32_t> column(std::size_t attr) const;
    const std::vector<std::string>& dictionary(std::size_t attr) const;

    /// Decoded raw value at (row, attr).
    const std::string& value(std::size_t row, std::size_t attr) const;

    std::optional<std::size_t> column_index(std::string_view name) const;

private:
    Relation() = default;

    std::vector<std::string> names_;
    std::vector<std::vector<std::uint32_t>> columns_;
    std::vector<std::vector<std::string>> dictionaries_;
    std::size_t row_count_ = 0;
};

/// Load a delimited text file into a Relation. Row order equals file order.
/// Rejects ragged rows (naming the 1-based physical line), duplicate header
/// names and files with zero data rows.
Relation load_table(const std::string& path, const IngestOptions& options = {});

}  // namespace fdscan
