#include "fdscan/discovery.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

#include "fdscan/parallel.hpp"

namespace fdscan {

namespace {

std::vector<Partition> single_partitions(const Relation& relation, unsigned threads) {
    std::vector<Partition> singles(relation.column_count());
    detail::parallel_for(singles.size(), threads,
                         [&](std::size_t i) { singles[i] = partition_of(relation, i); });
    return singles;
}

void sort_canonically(std::vector<FunctionalDependency>& fds) {
    std::sort(fds.begin(), fds.end(),
              [](const FunctionalDependency& a, const FunctionalDependency& b) {
                  if (a.rhs != b.rhs) return a.rhs < b.rhs;
                  if (a.lhs.size() != b.lhs.size()) return a.lhs.size() < b.lhs.size();
                  return a.lhs < b.lhs;
              });
}

/// One lattice node: an attribute set with its product partition.
struct Node {
    AttributeSet set;
    Partition part;
};

/// Apriori step: join nodes sharing all but their last attribute, keep a
/// candidate only when every size-k subset survived level k. Candidates come
/// out sorted because the input level is sorted.
std::vector<Node> next_level(const std::vector<Node>& level,
                             const std::vector<Partition>& singles, unsigned threads) {
    std::vector<AttributeSet> survivors;
    survivors.reserve(level.size());
    for (const Node& node : level) survivors.push_back(node.set);

    struct Candidate {
        AttributeSet set;
        std::size_t parent;      // index of the node missing the last attribute
        std::uint32_t last;
    };
    std::vector<Candidate> candidates;
    for (std::size_t i = 0; i < level.size(); ++i) {
        const auto& a = level[i].set.members();
        for (std::size_t j = i + 1; j < level.size(); ++j) {
            const auto& b = level[j].set.members();
            if (!std::equal(a.begin(), a.end() - 1, b.begin(), b.end() - 1)) break;
            AttributeSet joined = level[i].set.with(b.back());
            bool all_subsets_alive = true;
            for (const std::uint32_t drop : joined.members()) {
                if (drop == a.back() || drop == b.back()) continue;  // the two parents
                if (!std::binary_search(survivors.begin(), survivors.end(),
                                        joined.without(drop))) {
                    all_subsets_alive = false;
                    break;
                }
            }
            if (all_subsets_alive)
                candidates.push_back({std::move(joined), i, b.back()});
        }
    }

    std::vector<Node> next(candidates.size());
    detail::parallel_for(candidates.size(), threads, [&](std::size_t c) {
        next[c].set = std::move(candidates[c].set);
        next[c].part = product(level[candidates[c].parent].part, singles[candidates[c].last]);
    });
    return next;
}

void validate_fd_arguments(const Relation& relation, const AttributeSet& lhs,
                           std::uint32_t rhs) {
    if (lhs.empty()) throw std::invalid_argument("lhs is empty");
    if (rhs >= relation.column_count()) throw std::out_of_range("rhs attribute out of range");
    for (const std::uint32_t a : lhs.members())
        if (a >= relation.column_count()) throw std::out_of_range("lhs attribute out of range");
    if (lhs.contains(rhs)) throw std::invalid_argument("rhs attribute is part of the lhs");
}

}  // namespace

DependencyMatrix pairwise_matrix(const Relation& relation, unsigned threads) {
    const std::size_t n = relation.column_count();
    const std::vector<Partition> singles = single_partitions(relation, threads);

    DependencyMatrix matrix(relation.column_names());
    detail::parallel_for(n * n, threads, [&](std::size_t cell) {
        const std::size_t determined = cell / n;
        const std::size_t determinant = cell % n;
        const bool value = determined == determinant ||
                           refines(singles[determinant], singles[determined]);
        matrix.set(determined, determinant, value);
    });
    return matrix;
}

FunctionalDependency holds(const Relation& relation, const AttributeSet& lhs,
                           std::uint32_t rhs) {
    validate_fd_arguments(relation, lhs, rhs);
    const Partition lhs_partition = partition_of(relation, lhs);
    const Partition rhs_partition = partition_of(relation, rhs);
    if (refines(lhs_partition, rhs_partition)) return {lhs, rhs, true, std::nullopt};
    auto witness = detail::find_violation(lhs_partition, relation.column(rhs));
    assert(witness.has_value());
    return {lhs, rhs, false, witness};
}

std::vector<FunctionalDependency> minimal_fds(const Relation& relation,
                                              std::size_t max_lhs_size, unsigned threads) {
    if (max_lhs_size < 1) throw std::invalid_argument("max_lhs_size must be >= 1");
    const std::size_t n = relation.column_count();
    if (n < 2) return {};
    const std::size_t max_level = std::min(max_lhs_size, n - 1);

    const std::vector<Partition> singles = single_partitions(relation, threads);

    std::vector<Node> level(n);
    for (std::size_t i = 0; i < n; ++i)
        level[i] = {AttributeSet{static_cast<std::uint32_t>(i)}, singles[i]};

    std::vector<FunctionalDependency> results;
    // Minimal LHS sets found so far, per rhs; a superset of any entry is
    // non-minimal and skipped.
    std::vector<std::vector<AttributeSet>> found(n);

    for (std::size_t size = 1; size <= max_level && !level.empty(); ++size) {
        std::vector<std::vector<FunctionalDependency>> node_fds(level.size());
        detail::parallel_for(level.size(), threads, [&](std::size_t k) {
            const Node& node = level[k];
            for (std::uint32_t rhs = 0; rhs < n; ++rhs) {
                if (node.set.contains(rhs)) continue;
                const bool covered =
                    std::any_of(found[rhs].begin(), found[rhs].end(),
                                [&](const AttributeSet& s) { return s.subset_of(node.set); });
                if (covered) continue;
                if (refines(node.part, singles[rhs]))
                    node_fds[k].push_back({node.set, rhs, true, std::nullopt});
            }
        });
        for (auto& fds : node_fds) {
            for (auto& fd : fds) {
                found[fd.rhs].push_back(fd.lhs);
                results.push_back(std::move(fd));
            }
        }
        if (size == max_level) break;

        // Identity-partition nodes determine every attribute; their supersets
        // yield nothing minimal, so they do not grow further.
        std::vector<Node> survivors;
        survivors.reserve(level.size());
        for (Node& node : level)
            if (!node.part.is_identity()) survivors.push_back(std::move(node));
        level = next_level(survivors, singles, threads);
    }

    sort_canonically(results);
    return results;
}

std::vector<AttributeSet> candidate_keys(const Relation& relation, std::size_t max_size,
                                         unsigned threads) {
    if (max_size < 1) throw std::invalid_argument("max_size must be >= 1");
    const std::size_t n = relation.column_count();
    const std::size_t max_level = std::min(max_size, n);

    const std::vector<Partition> singles = single_partitions(relation, threads);

    std::vector<Node> level(n);
    for (std::size_t i = 0; i < n; ++i)
        level[i] = {AttributeSet{static_cast<std::uint32_t>(i)}, singles[i]};

    std::vector<AttributeSet> keys;
    for (std::size_t size = 1; size <= max_level && !level.empty(); ++size) {
        std::vector<Node> survivors;
        survivors.reserve(level.size());
        for (Node& node : level) {
            if (node.part.is_identity())
                keys.push_back(std::move(node.set));  // minimal: no subset reached identity
            else
                survivors.push_back(std::move(node));
        }
        if (size == max_level) break;
        level = next_level(survivors, singles, threads);
    }
    // Levels ascend by size and nodes are generated sorted, so `keys` is
    // already ordered by (size, members).
    return keys;
}

std::vector<std::vector<std::uint32_t>> equivalent_attributes(const Relation& relation) {
    const std::size_t n = relation.column_count();
    const std::vector<Partition> singles = single_partitions(relation, 1);

    std::vector<std::vector<std::uint32_t>> groups;
    std::vector<std::size_t> representative;  // attribute index per group
    for (std::uint32_t i = 0; i < n; ++i) {
        bool placed = false;
        for (std::size_t g = 0; g < groups.size(); ++g) {
            if (singles[representative[g]] == singles[i]) {
                groups[g].push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) {
            groups.push_back({i});
            representative.push_back(i);
        }
    }
    return groups;
}

}  // namespace fdscan
