#pragma once

#include <cstdint>
#include <vector>

#include "fdscan/attribute_set.hpp"
#include "fdscan/discovery.hpp"
#include "fdscan/relation.hpp"

namespace fdscan::oracle {

/// Widest relation the exhaustive enumerators accept. The oracle is a test
/// instrument; wider inputs fail fast instead of running for hours.
inline constexpr std::size_t k_max_columns = 12;

/// Decide lhs -> rhs straight from the definition: no two rows agree on all
/// lhs attributes while differing on rhs. Groups decoded value tuples and
/// shares no machinery with the partition algebra.
bool fd_holds_bruteforce(const Relation& relation, const AttributeSet& lhs,
                         std::uint32_t rhs);

/// Exhaustively enumerate every (lhs, rhs) with |lhs| <= max_lhs_size, keep
/// the holding ones, drop non-minimal entries. Sorted like minimal_fds.
/// Throws when the relation has more than k_max_columns columns.
std::vector<FunctionalDependency> all_minimal_fds_bruteforce(const Relation& relation,
                                                             std::size_t max_lhs_size);

/// True iff no two rows share the same decoded value tuple on `attrs`.
bool unique_rows_bruteforce(const Relation& relation, const AttributeSet& attrs);

/// Inclusion-minimal key sets up to max_size by subset enumeration over
/// decoded tuples. Sorted by (size, members). Same column-count guard.
std::vector<AttributeSet> minimal_keys_bruteforce(const Relation& relation,
                                                  std::size_t max_size);

}  // namespace fdscan::oracle
