#include "fdscan/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace fdscan {

/// Accumulates stored classes and finishes into canonical form. Members of
/// each added class must already be ascending; classes get reordered by
/// smallest member on finish.
class PartitionBuilder {
public:
    explicit PartitionBuilder(std::uint32_t row_count) { partition_.row_count_ = row_count; }

    void reserve_rows(std::size_t count) { partition_.rows_.reserve(count); }

    void add_class(std::span<const std::uint32_t> members_ascending) {
        partition_.rows_.insert(partition_.rows_.end(), members_ascending.begin(),
                                members_ascending.end());
        partition_.offsets_.push_back(static_cast<std::uint32_t>(partition_.rows_.size()));
    }

    Partition finish() {
        auto& p = partition_;
        const std::size_t k = p.stored_class_count();
        bool sorted = true;
        for (std::size_t i = 1; i < k; ++i) {
            if (p.rows_[p.offsets_[i]] < p.rows_[p.offsets_[i - 1]]) {
                sorted = false;
                break;
            }
        }
        if (!sorted) {
            std::vector<std::uint32_t> order(k);
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
                return p.rows_[p.offsets_[a]] < p.rows_[p.offsets_[b]];
            });
            std::vector<std::uint32_t> rows;
            rows.reserve(p.rows_.size());
            std::vector<std::uint32_t> offsets = {0};
            offsets.reserve(k + 1);
            for (const std::uint32_t i : order) {
                rows.insert(rows.end(), p.rows_.begin() + p.offsets_[i],
                            p.rows_.begin() + p.offsets_[i + 1]);
                offsets.push_back(static_cast<std::uint32_t>(rows.size()));
            }
            p.rows_ = std::move(rows);
            p.offsets_ = std::move(offsets);
        }
        return std::move(partition_);
    }

private:
    Partition partition_;
};

Partition Partition::identity(std::uint32_t row_count) {
    Partition p;
    p.row_count_ = row_count;
    return p;
}

Partition Partition::from_classes(std::uint32_t row_count,
                                  std::vector<std::vector<std::uint32_t>> classes) {
    std::vector<bool> seen(row_count, false);
    PartitionBuilder builder(row_count);
    for (auto& cls : classes) {
        if (cls.empty()) throw std::invalid_argument("empty partition class");
        std::sort(cls.begin(), cls.end());
        for (const std::uint32_t row : cls) {
            if (row >= row_count) throw std::invalid_argument("row index out of range");
            if (seen[row]) throw std::invalid_argument("row appears in two classes");
            seen[row] = true;
        }
        if (cls.size() >= 2) builder.add_class(cls);
    }
    return builder.finish();
}

std::size_t Partition::largest_class_size() const noexcept {
    std::size_t best = 0;
    for (std::size_t i = 0; i + 1 < offsets_.size(); ++i)
        best = std::max<std::size_t>(best, offsets_[i + 1] - offsets_[i]);
    return best;
}

Partition partition_of(const Relation& relation, std::size_t attr) {
    const auto codes = relation.column(attr);  // bounds-checked
    const std::uint32_t p = static_cast<std::uint32_t>(relation.row_count());
    const std::size_t dict_size = relation.dictionary(attr).size();

    std::vector<std::uint32_t> count(dict_size, 0);
    for (const std::uint32_t c : codes) ++count[c];

    // Assign compact ids to values occurring twice or more, in order of first
    // appearance; that order equals the order of each class's smallest member.
    constexpr std::uint32_t k_absent = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> kept_id(dict_size, k_absent);
    std::vector<std::uint32_t> offsets = {0};
    std::uint32_t kept = 0;
    for (std::uint32_t k = 0; k < p; ++k) {
        const std::uint32_t c = codes[k];
        if (count[c] >= 2 && kept_id[c] == k_absent) {
            kept_id[c] = kept++;
            offsets.push_back(offsets.back() + count[c]);
        }
    }

    std::vector<std::uint32_t> rows(offsets.back());
    std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
    for (std::uint32_t k = 0; k < p; ++k) {
        const std::uint32_t id = kept_id[codes[k]];
        if (id != k_absent) rows[cursor[id]++] = k;
    }

    PartitionBuilder builder(p);
    builder.reserve_rows(rows.size());
    for (std::uint32_t i = 0; i < kept; ++i)
        builder.add_class(std::span<const std::uint32_t>(rows.data() + offsets[i],
                                                         offsets[i + 1] - offsets[i]));
    return builder.finish();
}

Partition partition_of(const Relation& relation, const AttributeSet& attrs) {
    if (attrs.empty()) throw std::invalid_argument("attribute set is empty");
    Partition result = partition_of(relation, attrs.members().front());
    for (std::size_t i = 1; i < attrs.size(); ++i) {
        if (result.is_identity()) break;  // identity absorbs
        result = product(result, partition_of(relation, attrs.members()[i]));
    }
    return result;
}

Partition product(const Partition& a, const Partition& b) {
    if (a.row_count() != b.row_count())
        throw std::invalid_argument("product: row count mismatch");
    const std::uint32_t p = a.row_count();

    // Label each row with its stored-class id in b; 0 marks singletons.
    std::vector<std::uint32_t> label(p, 0);
    for (std::size_t j = 0; j < b.stored_class_count(); ++j)
        for (const std::uint32_t r : b.stored_class(j))
            label[r] = static_cast<std::uint32_t>(j) + 1;

    std::vector<std::vector<std::uint32_t>> bucket(b.stored_class_count());
    std::vector<std::uint32_t> touched;
    PartitionBuilder builder(p);
    for (std::size_t i = 0; i < a.stored_class_count(); ++i) {
        touched.clear();
        for (const std::uint32_t r : a.stored_class(i)) {
            const std::uint32_t lbl = label[r];
            if (lbl == 0) continue;  // singleton in b stays singleton
            auto& slot = bucket[lbl - 1];
            if (slot.empty()) touched.push_back(lbl - 1);
            slot.push_back(r);
        }
        for (const std::uint32_t t : touched) {
            if (bucket[t].size() >= 2) builder.add_class(bucket[t]);
            bucket[t].clear();
        }
    }
    return builder.finish();
}

bool refines(const Partition& lhs, const Partition& rhs) {
    if (lhs.row_count() != rhs.row_count())
        throw std::invalid_argument("refines: row count mismatch");
    if (lhs.stored_class_count() == 0) return true;   // only singletons left
    if (rhs.stored_class_count() == 0) return false;  // rhs is identity, lhs is not
    // A class larger than every rhs class cannot fit into any of them.
    if (lhs.largest_class_size() > rhs.largest_class_size()) return false;

    const std::uint32_t p = lhs.row_count();
    const auto stored = static_cast<std::uint32_t>(rhs.stored_class_count());

    // Row -> rhs class id; implicit singletons get ids of their own.
    std::vector<std::uint32_t> label(p);
    for (std::uint32_t r = 0; r < p; ++r) label[r] = stored + r;
    for (std::uint32_t j = 0; j < stored; ++j)
        for (const std::uint32_t r : rhs.stored_class(j)) label[r] = j;

    for (std::size_t i = 0; i < lhs.stored_class_count(); ++i) {
        const auto cls = lhs.stored_class(i);
        const std::uint32_t expect = label[cls.front()];
        for (std::size_t m = 1; m < cls.size(); ++m)
            if (label[cls[m]] != expect) return false;
    }
    return true;
}

namespace detail {

std::optional<RefutationWitness> find_violation(const Partition& lhs_partition,
                                                std::span<const std::uint32_t> rhs_codes) {
    for (std::size_t i = 0; i < lhs_partition.stored_class_count(); ++i) {
        const auto cls = lhs_partition.stored_class(i);
        const std::uint32_t expect = rhs_codes[cls.front()];
        for (std::size_t m = 1; m < cls.size(); ++m) {
            if (rhs_codes[cls[m]] != expect)
                return RefutationWitness{cls.front() + 1, cls[m] + 1};  // 1-based
        }
    }
    return std::nullopt;
}

}  // namespace detail

std::optional<RefutationWitness> refutes_with_witness(const Relation& relation,
                                                      const AttributeSet& lhs,
                                                      std::size_t rhs) {
    if (lhs.empty()) throw std::invalid_argument("lhs is empty");
    if (rhs >= relation.column_count()) throw std::out_of_range("rhs attribute out of range");
    if (lhs.contains(static_cast<std::uint32_t>(rhs)))
        throw std::invalid_argument("rhs attribute is part of the lhs");
    for (const std::uint32_t a : lhs.members())
        if (a >= relation.column_count()) throw std::out_of_range("lhs attribute out of range");

    const Partition lhs_partition = partition_of(relation, lhs);
    return detail::find_violation(lhs_partition, relation.column(rhs));
}

}  // namespace fdscan
