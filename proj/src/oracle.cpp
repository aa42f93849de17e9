#include "fdscan/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace fdscan::oracle {

namespace {

void validate_attrs(const Relation& relation, const AttributeSet& attrs) {
    for (const std::uint32_t a : attrs.members())
        if (a >= relation.column_count()) throw std::out_of_range("attribute out of range");
}

void check_column_guard(const Relation& relation) {
    if (relation.column_count() > k_max_columns)
        throw std::invalid_argument("oracle guard: relation wider than " +
                                    std::to_string(k_max_columns) + " columns");
}

std::vector<std::string> decoded_tuple(const Relation& relation, const AttributeSet& attrs,
                                       std::size_t row) {
    std::vector<std::string> tuple;
    tuple.reserve(attrs.size());
    for (const std::uint32_t a : attrs.members()) tuple.push_back(relation.value(row, a));
    return tuple;
}

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<AttributeSet> combinations(std::size_t n, std::size_t k) {
    std::vector<AttributeSet> out;
    if (k > n || k == 0) return out;
    std::vector<std::uint32_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<std::uint32_t>(i);
    while (true) {
        out.emplace_back(pick);
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

}  // namespace

bool fd_holds_bruteforce(const Relation& relation, const AttributeSet& lhs,
                         std::uint32_t rhs) {
    if (lhs.empty()) throw std::invalid_argument("lhs is empty");
    if (rhs >= relation.column_count()) throw std::out_of_range("rhs attribute out of range");
    if (lhs.contains(rhs)) throw std::invalid_argument("rhs attribute is part of the lhs");
    validate_attrs(relation, lhs);

    std::map<std::vector<std::string>, const std::string*> first_rhs;
    for (std::size_t row = 0; row < relation.row_count(); ++row) {
        const std::string& rhs_value = relation.value(row, rhs);
        auto [it, inserted] = first_rhs.try_emplace(decoded_tuple(relation, lhs, row), &rhs_value);
        if (!inserted && *it->second != rhs_value) return false;
    }
    return true;
}

std::vector<FunctionalDependency> all_minimal_fds_bruteforce(const Relation& relation,
                                                             std::size_t max_lhs_size) {
    check_column_guard(relation);
    if (max_lhs_size < 1) throw std::invalid_argument("max_lhs_size must be >= 1");
    const std::size_t n = relation.column_count();

    // Every holding dependency, grouped by rhs.
    std::vector<std::vector<AttributeSet>> held(n);
    for (std::size_t size = 1; size <= std::min(max_lhs_size, n > 0 ? n - 1 : 0); ++size) {
        for (const AttributeSet& lhs : combinations(n, size)) {
            for (std::uint32_t rhs = 0; rhs < n; ++rhs) {
                if (lhs.contains(rhs)) continue;
                if (fd_holds_bruteforce(relation, lhs, rhs)) held[rhs].push_back(lhs);
            }
        }
    }

    std::vector<FunctionalDependency> out;
    for (std::uint32_t rhs = 0; rhs < n; ++rhs) {
        for (const AttributeSet& lhs : held[rhs]) {
            const bool minimal = std::none_of(
                held[rhs].begin(), held[rhs].end(), [&](const AttributeSet& other) {
                    return other.size() < lhs.size() && other.subset_of(lhs);
                });
            if (minimal) out.push_back({lhs, rhs, true, std::nullopt});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const FunctionalDependency& a, const FunctionalDependency& b) {
                  if (a.rhs != b.rhs) return a.rhs < b.rhs;
                  if (a.lhs.size() != b.lhs.size()) return a.lhs.size() < b.lhs.size();
                  return a.lhs < b.lhs;
              });
    return out;
}

bool unique_rows_bruteforce(const Relation& relation, const AttributeSet& attrs) {
    if (attrs.empty()) throw std::invalid_argument("attribute set is empty");
    validate_attrs(relation, attrs);
    std::map<std::vector<std::string>, bool> seen;
    for (std::size_t row = 0; row < relation.row_count(); ++row)
        if (!seen.try_emplace(decoded_tuple(relation, attrs, row), true).second) return false;
    return true;
}

std::vector<AttributeSet> minimal_keys_bruteforce(const Relation& relation,
                                                  std::size_t max_size) {
    check_column_guard(relation);
    if (max_size < 1) throw std::invalid_argument("max_size must be >= 1");
    const std::size_t n = relation.column_count();

    std::vector<AttributeSet> keys;
    for (std::size_t size = 1; size <= std::min(max_size, n); ++size) {
        for (const AttributeSet& candidate : combinations(n, size)) {
            const bool has_key_subset =
                std::any_of(keys.begin(), keys.end(),
                            [&](const AttributeSet& key) { return key.subset_of(candidate); });
            if (has_key_subset) continue;
            if (unique_rows_bruteforce(relation, candidate)) keys.push_back(candidate);
        }
    }
    return keys;  // (size, members) order by construction
}

}  // namespace fdscan::oracle
