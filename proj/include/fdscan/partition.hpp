#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fdscan/attribute_set.hpp"
#include "fdscan/relation.hpp"

namespace fdscan {

/// Stripped partition of the row universe {0..p-1}: only classes with two or
/// more members are stored, every row absent from all stored classes is an
/// implicit singleton. Canonical form — members ascending within a class,
/// classes ordered by smallest member — so partition equality is plain
/// structural equality. Immutable value type; all operations on it are pure.
class Partition {
public:
    Partition() = default;  // empty universe, no classes

    /// The identity partition {{0},{1},...}: nothing stored.
    static Partition identity(std::uint32_t row_count);

    /// Build from explicit classes (0-based row indices). Members are sorted,
    /// singleton classes elided. Rejects empty classes, out-of-range rows and
    /// rows appearing twice.
    static Partition from_classes(std::uint32_t row_count,
                                  std::vector<std::vector<std::uint32_t>> classes);

    std::uint32_t row_count() const noexcept { return row_count_; }
    std::size_t stored_class_count() const noexcept { return offsets_.size() - 1; }

    /// Total class count including implicit singletons; equals the number of
    /// distinct values of the generating attribute set.
    std::size_t class_count() const noexcept {
        return stored_class_count() + row_count_ - rows_.size();
    }

    std::span<const std::uint32_t> stored_class(std::size_t i) const {
        return {rows_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
    }

    std::size_t largest_class_size() const noexcept;

    bool is_identity() const noexcept { return stored_class_count() == 0; }

    /// Bytes held by the stored representation (used by scale checks).
    std::size_t memory_bytes() const noexcept {
        return rows_.capacity() * sizeof(std::uint32_t) +
               offsets_.capacity() * sizeof(std::uint32_t);
    }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    friend class PartitionBuilder;

    std::uint32_t row_count_ = 0;
    std::vector<std::uint32_t> rows_;                 // concatenated class members
    std::vector<std::uint32_t> offsets_ = {0};        // class i = rows_[offsets_[i], offsets_[i+1])
};

/// Pair of rows refuting an FD: they agree on every LHS attribute and differ
/// on the RHS attribute. Indices are 1-based enumeration indices, matching
/// every report surface.
struct RefutationWitness {
    std::uint32_t row_a = 0;
    std::uint32_t row_b = 0;
    friend bool operator==(const RefutationWitness&, const RefutationWitness&) = default;
};

/// Partition of the rows by the values of one attribute: rows share a class
/// iff they hold the same value.
Partition partition_of(const Relation& relation, std::size_t attr);

/// Partition generated by an attribute set, computed as the iterated product
/// of the single-attribute partitions.
Partition partition_of(const Relation& relation, const AttributeSet& attrs);

/// Coarsest partition refining both operands: rows share a result class iff
/// they share a class in `a` and in `b`.
Partition product(const Partition& a, const Partition& b);

/// True iff every class of `lhs` (implicit singletons included) is contained
/// in some class of `rhs`. Singleton classes are never examined; a stored
/// class larger than every `rhs` class fails without inspection.
bool refines(const Partition& lhs, const Partition& rhs);

inline bool is_identity(const Partition& p) noexcept { return p.is_identity(); }

/// Searches for a pair of rows contradicting lhs -> rhs. Returns the
/// lexicographically smallest violating (row_a, row_b), or nothing when the
/// dependency holds.
std::optional<RefutationWitness> refutes_with_witness(const Relation& relation,
                                                      const AttributeSet& lhs,
                                                      std::size_t rhs);

namespace detail {
/// Scan a LHS partition for the smallest pair of rows whose `rhs_codes`
/// differ inside one class.
std::optional<RefutationWitness> find_violation(const Partition& lhs_partition,
                                                std::span<const std::uint32_t> rhs_codes);
}  // namespace detail

}  // namespace fdscan
