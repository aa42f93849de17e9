#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace fdscan {

/// Ordered set of column indices, kept sorted ascending with no duplicates.
/// Serves as the left-hand side of a functional dependency.
class AttributeSet {
public:
    AttributeSet() = default;

    AttributeSet(std::initializer_list<std::uint32_t> attrs)
        : AttributeSet(std::vector<std::uint32_t>(attrs)) {}

    explicit AttributeSet(std::vector<std::uint32_t> attrs) : members_(std::move(attrs)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    bool empty() const noexcept { return members_.empty(); }
    std::size_t size() const noexcept { return members_.size(); }
    const std::vector<std::uint32_t>& members() const noexcept { return members_; }

    bool contains(std::uint32_t attr) const {
        return std::binary_search(members_.begin(), members_.end(), attr);
    }

    bool subset_of(const AttributeSet& other) const {
        return std::includes(other.members_.begin(), other.members_.end(),
                             members_.begin(), members_.end());
    }

    /// Copy with `attr` added.
    AttributeSet with(std::uint32_t attr) const {
        AttributeSet out = *this;
        auto pos = std::lower_bound(out.members_.begin(), out.members_.end(), attr);
        if (pos == out.members_.end() || *pos != attr) out.members_.insert(pos, attr);
        return out;
    }

    /// Copy with `attr` removed (no-op when absent).
    AttributeSet without(std::uint32_t attr) const {
        AttributeSet out = *this;
        auto pos = std::lower_bound(out.members_.begin(), out.members_.end(), attr);
        if (pos != out.members_.end() && *pos == attr) out.members_.erase(pos);
        return out;
    }

    // Lexicographic order on the sorted member list.
    auto operator<=>(const AttributeSet&) const = default;

private:
    std::vector<std::uint32_t> members_;
};

}  // namespace fdscan
