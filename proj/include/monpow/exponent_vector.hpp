#pragma once

#include "monpow/errors.hpp"
#include "monpow/integer.hpp"

#include <cstddef>
#include <numeric>
#include <ostream>
#include <utility>
#include <vector>

namespace monpow {

/// A monomial without coefficient: one non-negative exponent per variable.
///
/// Values are immutable once constructed and compare lexicographically on
/// their entries. The entry at position i (0-based) is the exponent of the
/// (i+1)-th variable.
class ExponentVector {
  public:
    ExponentVector() = default;

    explicit ExponentVector(std::vector<Integer> entries) : entries_(std::move(entries)) {
        for (const Integer& e : entries_) {
            if (e < 0) {
                throw DomainError("exponent vector entries must be non-negative");
            }
        }
    }

    static ExponentVector zero(std::size_t length) {
        return ExponentVector(std::vector<Integer>(length, Integer(0)));
    }

    /// Unit vector for the given 1-based variable index.
    static ExponentVector unit(std::size_t length, std::size_t var) {
        if (var < 1 || var > length) {
            throw DomainError("variable index out of range");
        }
        std::vector<Integer> e(length, Integer(0));
        e[var - 1] = 1;
        return ExponentVector(std::move(e));
    }

    std::size_t size() const { return entries_.size(); }

    const Integer& operator[](std::size_t pos) const { return entries_[pos]; }

    const std::vector<Integer>& entries() const { return entries_; }

    Integer total_degree() const {
        return std::accumulate(entries_.begin(), entries_.end(), Integer(0));
    }

    bool is_zero() const {
        for (const Integer& e : entries_) {
            if (e != 0) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
    friend bool operator<(const ExponentVector& a, const ExponentVector& b) {
        return a.entries_ < b.entries_; // lexicographic
    }

  private:
    std::vector<Integer> entries_;
};

namespace detail {
inline void require_same_length(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size()) {
        throw DimensionError("exponent vectors have different lengths");
    }
}
} // namespace detail

/// True iff u divides v, i.e. u <= v componentwise.
inline bool divides(const ExponentVector& u, const ExponentVector& v) {
    detail::require_same_length(u, v);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] > v[i]) {
            return false;
        }
    }
    return true;
}

/// Componentwise minimum (greatest common divisor of the monomials).
inline ExponentVector gcd(const ExponentVector& u, const ExponentVector& v) {
    detail::require_same_length(u, v);
    std::vector<Integer> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        out[i] = u[i] < v[i] ? u[i] : v[i];
    }
    return ExponentVector(std::move(out));
}

/// Componentwise maximum (least common multiple of the monomials).
inline ExponentVector lcm(const ExponentVector& u, const ExponentVector& v) {
    detail::require_same_length(u, v);
    std::vector<Integer> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        out[i] = u[i] > v[i] ? u[i] : v[i];
    }
    return ExponentVector(std::move(out));
}

/// Componentwise sum (product of the monomials).
inline ExponentVector mul(const ExponentVector& u, const ExponentVector& v) {
    detail::require_same_length(u, v);
    std::vector<Integer> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        out[i] = u[i] + v[i];
    }
    return ExponentVector(std::move(out));
}

/// Componentwise difference u - v. Requires divides(v, u).
inline ExponentVector div_exact(const ExponentVector& u, const ExponentVector& v) {
    detail::require_same_length(u, v);
    std::vector<Integer> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (v[i] > u[i]) {
            throw ExactDivisionError("monomial division with remainder");
        }
        out[i] = u[i] - v[i];
    }
    return ExponentVector(std::move(out));
}

inline std::ostream& operator<<(std::ostream& os, const ExponentVector& v) {
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) {
            os << ",";
        }
        os << v[i];
    }
    return os << ")";
}

} // namespace monpow
