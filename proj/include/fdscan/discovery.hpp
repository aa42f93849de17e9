#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fdscan/attribute_set.hpp"
#include "fdscan/partition.hpp"
#include "fdscan/relation.hpp"

namespace fdscan {

struct FunctionalDependency {
    AttributeSet lhs;
    std::uint32_t rhs = 0;
    bool holds = false;
    std::optional<RefutationWitness> witness;  // present iff !holds

    friend bool operator==(const FunctionalDependency&, const FunctionalDependency&) = default;
};

/// n x n boolean matrix of single-attribute dependencies. Cell (determined r,
/// determinant c) is true iff attribute c functionally determines attribute r;
/// the diagonal is always true.
class DependencyMatrix {
public:
    DependencyMatrix() = default;
    explicit DependencyMatrix(std::vector<std::string> attribute_names)
        : names_(std::move(attribute_names)), cells_(names_.size() * names_.size(), 0) {}

    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& attribute_names() const noexcept { return names_; }

    bool at(std::size_t determined, std::size_t determinant) const {
        return cells_[determined * size() + determinant] != 0;
    }
    void set(std::size_t determined, std::size_t determinant, bool value) {
        cells_[determined * size() + determinant] = value ? 1 : 0;
    }

    friend bool operator==(const DependencyMatrix&, const DependencyMatrix&) = default;

private:
    std::vector<std::string> names_;
    std::vector<std::uint8_t> cells_;  // row-major, row = determined attribute
};

/// All single-attribute dependencies: cell (r, c) = refines(partition of c,
/// partition of r). Partition builds and refinement checks fan out over
/// `threads` workers; the result is identical for any thread count.
DependencyMatrix pairwise_matrix(const Relation& relation, unsigned threads = 1);

/// Decide lhs -> rhs via partition refinement. On failure the returned
/// dependency carries the smallest refuting row pair.
FunctionalDependency holds(const Relation& relation, const AttributeSet& lhs,
                           std::uint32_t rhs);

/// All minimal functional dependencies with |lhs| <= max_lhs_size, levelwise
/// lattice search with superset pruning. Sorted by (rhs, lhs size, lhs).
std::vector<FunctionalDependency> minimal_fds(const Relation& relation,
                                              std::size_t max_lhs_size,
                                              unsigned threads = 1);

/// All inclusion-minimal attribute sets of size <= max_size whose partition
/// is the identity. Sorted by (size, members).
std::vector<AttributeSet> candidate_keys(const Relation& relation, std::size_t max_size,
                                         unsigned threads = 1);

/// Group column indices by identical partitions; attributes in one group are
/// mutually dependent. Singleton groups included; groups ordered by smallest
/// member.
std::vector<std::vector<std::uint32_t>> equivalent_attributes(const Relation& relation);

}  // namespace fdscan
