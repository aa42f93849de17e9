#include "fdscan/relation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace fdscan {

namespace {

void trim_ascii(std::string& s) {
    const auto is_space = [](unsigned char c) {
        return c == ' ' || c == '\t' || c == '\v' || c == '\f' || c == '\r';
    };
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && is_space(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && is_space(static_cast<unsigned char>(s[e - 1]))) --e;
    if (b != 0 || e != s.size()) s = s.substr(b, e - b);
}

void fold_ascii(std::string& s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

std::vector<std::string> split_fields(const std::string& line, char delimiter) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(delimiter, start);
        if (pos == std::string::npos) {
            fields.emplace_back(line.substr(start));
            return fields;
        }
        fields.emplace_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

/// Incremental per-column dictionary encoder.
struct ColumnEncoder {
    std::vector<std::uint32_t> codes;
    std::vector<std::string> dictionary;
    std::unordered_map<std::string, std::uint32_t> index;

    void push(std::string value) {
        auto it = index.find(value);
        if (it == index.end()) {
            const auto code = static_cast<std::uint32_t>(dictionary.size());
            index.emplace(value, code);
            dictionary.push_back(std::move(value));
            codes.push_back(code);
        } else {
            codes.push_back(it->second);
        }
    }
};

void check_unique_names(const std::vector<std::string>& names) {
    std::unordered_set<std::string_view> seen;
    for (const auto& name : names) {
        if (!seen.insert(name).second)
            throw IngestError("duplicate column name '" + name + "'", 1);
    }
}

}  // namespace

EncodedColumn encode_column(const std::vector<std::string>& raw) {
    if (raw.empty()) throw std::invalid_argument("encode_column: empty column");
    ColumnEncoder enc;
    enc.codes.reserve(raw.size());
    for (const auto& value : raw) enc.push(value);
    return {std::move(enc.codes), std::move(enc.dictionary)};
}

Relation Relation::from_encoded(std::vector<std::string> column_names,
                                std::vector<std::vector<std::uint32_t>> columns,
                                std::vector<std::vector<std::string>> dictionaries) {
    if (column_names.empty()) throw std::invalid_argument("relation needs at least one column");
    if (columns.size() != column_names.size() || dictionaries.size() != column_names.size())
        throw std::invalid_argument("column/name/dictionary count mismatch");
    {
        std::unordered_set<std::string_view> seen;
        for (const auto& name : column_names)
            if (!seen.insert(name).second)
                throw std::invalid_argument("duplicate column name '" + name + "'");
    }
    const std::size_t p = columns.front().size();
    if (p == 0) throw std::invalid_argument("relation needs at least one row");
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i].size() != p)
            throw std::invalid_argument("column '" + column_names[i] + "' has wrong length");
        const auto dict_size = static_cast<std::uint32_t>(dictionaries[i].size());
        std::vector<bool> used(dict_size, false);
        for (const std::uint32_t code : columns[i]) {
            if (code >= dict_size)
                throw std::invalid_argument("column '" + column_names[i] + "': code out of range");
            used[code] = true;
        }
        if (std::find(used.begin(), used.end(), false) != used.end())
            throw std::invalid_argument("column '" + column_names[i] + "': unused dictionary entry");
        std::unordered_set<std::string_view> values;
        for (const auto& v : dictionaries[i])
            if (!values.insert(v).second)
                throw std::invalid_argument("column '" + column_names[i] +
                                            "': duplicate dictionary value '" + v + "'");
    }
    Relation rel;
    rel.names_ = std::move(column_names);
    rel.columns_ = std::move(columns);
    rel.dictionaries_ = std::move(dictionaries);
    rel.row_count_ = p;
    return rel;
}

Relation Relation::from_rows(std::vector<std::string> column_names,
                             const std::vector<std::vector<std::string>>& rows) {
    if (column_names.empty()) throw std::invalid_argument("relation needs at least one column");
    if (rows.empty()) throw std::invalid_argument("relation needs at least one row");
    const std::size_t n = column_names.size();
    std::vector<ColumnEncoder> encoders(n);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (rows[k].size() != n)
            throw std::invalid_argument("row " + std::to_string(k + 1) + " has " +
                                        std::to_string(rows[k].size()) + " fields, expected " +
                                        std::to_string(n));
        for (std::size_t i = 0; i < n; ++i) encoders[i].push(rows[k][i]);
    }
    std::vector<std::vector<std::uint32_t>> columns;
    std::vector<std::vector<std::string>> dictionaries;
    columns.reserve(n);
    dictionaries.reserve(n);
    for (auto& enc : encoders) {
        columns.push_back(std::move(enc.codes));
        dictionaries.push_back(std::move(enc.dictionary));
    }
    return from_encoded(std::move(column_names), std::move(columns), std::move(dictionaries));
}

std::span<const std::uint32_t> Relation::column(std::size_t attr) const {
    if (attr >= columns_.size()) throw std::out_of_range("attribute index out of range");
    return columns_[attr];
}

const std::vector<std::string>& Relation::dictionary(std::size_t attr) const {
    if (attr >= dictionaries_.size()) throw std::out_of_range("attribute index out of range");
    return dictionaries_[attr];
}

const std::string& Relation::value(std::size_t row, std::size_t attr) const {
    if (attr >= columns_.size()) throw std::out_of_range("attribute index out of range");
    if (row >= row_count_) throw std::out_of_range("row index out of range");
    return dictionaries_[attr][columns_[attr][row]];
}

std::optional<std::size_t> Relation::column_index(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

Relation load_table(const std::string& path, const IngestOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IngestError("cannot open '" + path + "'");

    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string> names;
    std::vector<ColumnEncoder> encoders;
    std::size_t n = 0;
    std::size_t data_rows = 0;

    const auto next_line = [&]() -> bool {
        if (!std::getline(in, line)) return false;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return true;
    };

    if (options.has_header) {
        if (!next_line()) throw IngestError("'" + path + "': empty file");
        names = split_fields(line, options.delimiter);
        if (options.trim)
            for (auto& name : names) trim_ascii(name);
        check_unique_names(names);
        n = names.size();
        encoders.resize(n);
    }

    while (next_line()) {
        std::vector<std::string> fields = split_fields(line, options.delimiter);
        if (encoders.empty()) {  // headerless: first data row fixes the width
            n = fields.size();
            encoders.resize(n);
            names.reserve(n);
            for (std::size_t i = 0; i < n; ++i) names.push_back("A" + std::to_string(i + 1));
        } else if (fields.size() != n) {
            throw IngestError("'" + path + "': line " + std::to_string(line_no) + " has " +
                                  std::to_string(fields.size()) + " fields, expected " +
                                  std::to_string(n),
                              line_no);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (options.trim) trim_ascii(fields[i]);
            if (options.fold_case) fold_ascii(fields[i]);
            encoders[i].push(std::move(fields[i]));
        }
        ++data_rows;
    }
    if (in.bad()) throw IngestError("'" + path + "': read failure");
    if (data_rows == 0) throw IngestError("'" + path + "': no data rows");

    std::vector<std::vector<std::uint32_t>> columns;
    std::vector<std::vector<std::string>> dictionaries;
    columns.reserve(n);
    dictionaries.reserve(n);
    for (auto& enc : encoders) {
        columns.push_back(std::move(enc.codes));
        dictionaries.push_back(std::move(enc.dictionary));
    }
    return Relation::from_encoded(std::move(names), std::move(columns), std::move(dictionaries));
}

}  // namespace fdscan
