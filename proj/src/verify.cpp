#include "fdscan/verify.hpp"

#include "fdscan/oracle.hpp"

namespace fdscan::verify {

void minimal_fds(const Relation& relation, const std::vector<FunctionalDependency>& fds,
                 std::size_t max_lhs) {
    if (relation.column_count() <= oracle::k_max_columns) {
        if (oracle::all_minimal_fds_bruteforce(relation, max_lhs) != fds)
            throw VerificationError(
                "discovered dependencies disagree with exhaustive enumeration");
        return;
    }
    for (const auto& fd : fds) {
        if (!fd.holds || !oracle::fd_holds_bruteforce(relation, fd.lhs, fd.rhs))
            throw VerificationError("reported dependency refuted by the oracle");
        if (fd.lhs.size() > 1) {
            for (const std::uint32_t drop : fd.lhs.members())
                if (oracle::fd_holds_bruteforce(relation, fd.lhs.without(drop), fd.rhs))
                    throw VerificationError("reported dependency is not minimal");
        }
    }
}

bool candidate_keys(const Relation& relation, const std::vector<AttributeSet>& keys,
                    std::size_t max_size) {
    if (relation.column_count() <= oracle::k_max_columns) {
        if (oracle::minimal_keys_bruteforce(relation, max_size) != keys)
            throw VerificationError("candidate keys disagree with exhaustive enumeration");
        return true;
    }
    for (const auto& key : keys) {
        if (!oracle::unique_rows_bruteforce(relation, key))
            throw VerificationError("reported key does not identify every row");
        if (key.size() > 1) {
            for (const std::uint32_t drop : key.members())
                if (oracle::unique_rows_bruteforce(relation, key.without(drop)))
                    throw VerificationError("reported key is not minimal");
        }
    }
    return false;  // completeness not checkable at this width
}

void matrix(const Relation& relation, const DependencyMatrix& matrix) {
    for (std::uint32_t determined = 0; determined < matrix.size(); ++determined) {
        for (std::uint32_t determinant = 0; determinant < matrix.size(); ++determinant) {
            if (determined == determinant) {
                if (!matrix.at(determined, determinant))
                    throw VerificationError("matrix diagonal must be true");
                continue;
            }
            const bool expected =
                oracle::fd_holds_bruteforce(relation, AttributeSet{determinant}, determined);
            if (matrix.at(determined, determinant) != expected)
                throw VerificationError("matrix cell disagrees with the oracle");
        }
    }
}

void check(const Relation& relation, const FunctionalDependency& fd) {
    if (oracle::fd_holds_bruteforce(relation, fd.lhs, fd.rhs) != fd.holds)
        throw VerificationError("check verdict disagrees with the oracle");
}

}  // namespace fdscan::verify
