#pragma once

#include "monpow/errors.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

namespace monpow {

/// A subset M of {1..r}, naming the monomial prime generated by the
/// variables with index in M. Members are 1-based and kept in ascending
/// order.
class PrimeSupport {
  public:
    PrimeSupport() = default;

    explicit PrimeSupport(std::vector<int> members) : members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
        if (!members_.empty() && members_.front() < 1) {
            throw DomainError("variable indices are 1-based");
        }
    }

    PrimeSupport(std::initializer_list<int> members)
        : PrimeSupport(std::vector<int>(members)) {}

    /// The full set {1..r}.
    static PrimeSupport full(std::size_t var_count) {
        std::vector<int> m(var_count);
        for (std::size_t i = 0; i < var_count; ++i) {
            m[i] = static_cast<int>(i + 1);
        }
        return PrimeSupport(std::move(m));
    }

    const std::vector<int>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    bool contains(int var) const {
        return std::binary_search(members_.begin(), members_.end(), var);
    }

    bool is_subset_of(const PrimeSupport& other) const {
        return std::includes(other.members_.begin(), other.members_.end(),
                             members_.begin(), members_.end());
    }

    int max_member() const { return members_.empty() ? 0 : members_.back(); }

    friend bool operator==(const PrimeSupport&, const PrimeSupport&) = default;

    // Canonical order: ascending size, then lexicographic. Every set of
    // supports in this library is sorted this way.
    friend bool operator<(const PrimeSupport& a, const PrimeSupport& b) {
        if (a.members_.size() != b.members_.size()) {
            return a.members_.size() < b.members_.size();
        }
        return a.members_ < b.members_;
    }

  private:
    std::vector<int> members_;
};

inline std::ostream& operator<<(std::ostream& os, const PrimeSupport& s) {
    os << "{";
    for (std::size_t i = 0; i < s.members().size(); ++i) {
        if (i) {
            os << ",";
        }
        os << s.members()[i];
    }
    return os << "}";
}

} // namespace monpow
