#pragma once

#include <stdexcept>
#include <vector>

#include "fdscan/attribute_set.hpp"
#include "fdscan/discovery.hpp"
#include "fdscan/relation.hpp"

namespace fdscan {

/// Discovery output disagreed with the brute-force oracle.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace verify {

/// Cross-check discovered minimal dependencies. Narrow relations are compared
/// against the full exhaustive enumeration; wider ones get each emitted
/// dependency re-checked (validity and minimality) from the definition.
/// Throws VerificationError on any disagreement.
void minimal_fds(const Relation& relation, const std::vector<FunctionalDependency>& fds,
                 std::size_t max_lhs);

/// Cross-check candidate keys the same way. Completeness is only checked for
/// relations narrow enough to enumerate; soundness and minimality always are.
/// Returns false when the completeness half had to be skipped.
bool candidate_keys(const Relation& relation, const std::vector<AttributeSet>& keys,
                    std::size_t max_size);

/// Re-derive every off-diagonal matrix cell from the definition.
void matrix(const Relation& relation, const DependencyMatrix& matrix);

/// Re-check a single dependency verdict.
void check(const Relation& relation, const FunctionalDependency& fd);

}  // namespace verify
}  // namespace fdscan
