#pragma once

#include "monpow/errors.hpp"
#include "monpow/exponent_vector.hpp"
#include "monpow/ideal.hpp"
#include "monpow/integer.hpp"
#include "monpow/prime_support.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

namespace monpow {

/// A set of monomial primes, each given by its variable support.
/// Kept sorted by ascending size, then lexicographically.
class AssSet {
  public:
    AssSet() = default;

    explicit AssSet(std::vector<PrimeSupport> primes) : primes_(std::move(primes)) {
        std::sort(primes_.begin(), primes_.end());
        primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
    }

    const std::vector<PrimeSupport>& primes() const { return primes_; }
    std::size_t size() const { return primes_.size(); }
    bool empty() const { return primes_.empty(); }

    bool contains(const PrimeSupport& p) const {
        return std::binary_search(primes_.begin(), primes_.end(), p);
    }

    bool is_subset_of(const AssSet& other) const {
        return std::includes(other.primes_.begin(), other.primes_.end(),
                             primes_.begin(), primes_.end());
    }

    /// The same set with all single-variable primes removed.
    AssSet without_singletons() const {
        std::vector<PrimeSupport> rest;
        for (const PrimeSupport& p : primes_) {
            if (p.size() > 1) {
                rest.push_back(p);
            }
        }
        return AssSet(std::move(rest));
    }

    friend bool operator==(const AssSet&, const AssSet&) = default;

  private:
    std::vector<PrimeSupport> primes_;
};

inline std::ostream& operator<<(std::ostream& os, const AssSet& s) {
    os << "{";
    for (std::size_t i = 0; i < s.primes().size(); ++i) {
        if (i) {
            os << ", ";
        }
        os << s.primes()[i];
    }
    return os << "}";
}

/// Restrict I to the variables in M: exponents outside M are dropped
/// (those variables become units), the result lives in |M| variables.
inline MonomialIdeal localize(const MonomialIdeal& I, const PrimeSupport& M) {
    detail::require_proper_nonzero(I, "localize");
    if (M.empty()) {
        throw DomainError("localization at the empty support");
    }
    if (M.max_member() > static_cast<int>(I.var_count())) {
        throw DomainError("support member exceeds variable count");
    }
    std::vector<ExponentVector> projected;
    projected.reserve(I.gen_count());
    for (const ExponentVector& g : I.generators()) {
        std::vector<Integer> e;
        e.reserve(M.size());
        for (int var : M.members()) {
            e.push_back(g[static_cast<std::size_t>(var - 1)]);
        }
        projected.push_back(ExponentVector(std::move(e)));
    }
    return minimalize(M.size(), std::move(projected));
}

/// The prime ideal generated by the variables in M, inside r variables.
inline MonomialIdeal prime_ideal(std::size_t var_count, const PrimeSupport& M) {
    std::vector<ExponentVector> gens;
    gens.reserve(M.size());
    for (int var : M.members()) {
        gens.push_back(ExponentVector::unit(var_count, static_cast<std::size_t>(var)));
    }
    return minimalize(var_count, std::move(gens));
}

/// Is the maximal ideal (X_1,...,X_r) an associated prime of I?
///
/// Equivalent to I : (X_1,...,X_r) != I. Two shortcuts apply: with fewer
/// generators than variables the maximal ideal is never associated, and a
/// variable dividing no generator rules it out as well. The remaining case
/// searches for a monomial w outside I with w*X_i in I for every i, which is
/// exactly an element of (I:m) \ I. Such a w can be truncated componentwise
/// to w_i <= D_i, where D_i is the largest exponent of X_i among the
/// generators: truncation keeps w outside I (I is an up-set) and keeps every
/// divisibility g <= w + e_i valid because g_i <= D_i. The search box
/// [0,D_1]x...x[0,D_r] is therefore exhaustive.
inline bool max_ideal_associated(const MonomialIdeal& I) {
    detail::require_proper_nonzero(I, "max_ideal_associated");
    const std::size_t r = I.var_count();
    if (I.gen_count() < r) {
        return false;
    }
    if (support(I).size() != r) {
        return false;
    }

    std::vector<Integer> box(r, Integer(0));
    for (const ExponentVector& g : I.generators()) {
        for (std::size_t i = 0; i < r; ++i) {
            if (g[i] > box[i]) {
                box[i] = g[i];
            }
        }
    }

    // Odometer over the box, scanning from the top corner downward; socle
    // witnesses sit near the top, so hits come early.
    std::vector<Integer> w = box;
    while (true) {
        ExponentVector cand{std::vector<Integer>(w)};
        if (!contains(I, cand)) {
            bool all_in = true;
            for (std::size_t i = 1; i <= r && all_in; ++i) {
                all_in = contains(I, mul(cand, ExponentVector::unit(r, i)));
            }
            if (all_in) {
                return true;
            }
        }
        std::size_t pos = 0;
        while (pos < r && w[pos] == 0) {
            w[pos] = box[pos];
            ++pos;
        }
        if (pos == r) {
            return false;
        }
        w[pos] -= 1;
    }
}

namespace detail {
inline void for_each_subset_of(const std::vector<int>& pool, std::size_t size,
                               const auto& fn) {
    std::vector<int> current;
    current.reserve(size);
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (current.size() == size) {
            fn(current);
            return;
        }
        for (std::size_t i = start; i < pool.size(); ++i) {
            if (pool.size() - i < size - current.size()) {
                break;
            }
            current.push_back(pool[i]);
            self(self, i + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
}
} // namespace detail

/// All associated primes of I, via localization: M is included iff the
/// maximal ideal of the restricted ring is associated to the restricted
/// ideal. Only subsets of the support with at most min(r, s) elements can
/// occur. Enumeration is by ascending size, lexicographic within a size.
inline AssSet ass(const MonomialIdeal& I) {
    detail::require_proper_nonzero(I, "ass");
    const PrimeSupport sup = support(I);
    const std::vector<int>& pool = sup.members();
    std::size_t max_size = std::min({I.var_count(), I.gen_count(), pool.size()});
    std::vector<PrimeSupport> found;
    for (std::size_t size = 1; size <= max_size; ++size) {
        detail::for_each_subset_of(pool, size, [&](const std::vector<int>& members) {
            PrimeSupport M{std::vector<int>(members)};
            MonomialIdeal restricted = localize(I, M);
            if (restricted.is_unit()) {
                return;
            }
            if (max_ideal_associated(restricted)) {
                found.push_back(std::move(M));
            }
        });
    }
    return AssSet(std::move(found));
}

enum class WitnessStatus {
    found,          // a monomial a with I : a = p(M) was located
    not_associated, // p(M) is not an associated prime of I
    cap_exceeded,   // p(M) is associated but no witness lies in the search box
};

struct WitnessResult {
    WitnessStatus status;
    std::optional<ExponentVector> witness;
};

namespace detail {
// Enumerate all a in [0, side]^r by ascending total degree, lexicographic
// within a degree, until fn returns true.
inline bool search_box_by_degree(std::size_t r, const Integer& side, const auto& fn) {
    const Integer max_degree = side * Integer(r);
    std::vector<Integer> a(r, Integer(0));
    for (Integer deg = 0; deg <= max_degree; ++deg) {
        auto rec = [&](auto&& self, std::size_t pos, const Integer& remaining) -> bool {
            if (pos + 1 == r) {
                if (remaining > side) {
                    return false;
                }
                a[pos] = remaining;
                return fn(a);
            }
            Integer limit = remaining < side ? remaining : side;
            for (Integer v = 0; v <= limit; ++v) {
                a[pos] = v;
                if (self(self, pos + 1, remaining - v)) {
                    return true;
                }
            }
            return false;
        };
        if (rec(rec, 0, deg)) {
            return true;
        }
    }
    return false;
}
} // namespace detail

/// Search for a witness monomial a with I : a = p(M).
///
/// Existence is guaranteed whenever p(M) is associated, but not its
/// location; the search is cut off at the box [0, box_side]^r. By default
/// box_side is d + r where d is the maximal generator degree (so for an
/// n-th power the box side scales with n*d). An exhausted box is reported
/// as cap_exceeded, never as "not associated".
inline WitnessResult find_witness(const MonomialIdeal& I, const PrimeSupport& M,
                                  std::optional<Integer> box_side = std::nullopt) {
    detail::require_proper_nonzero(I, "find_witness");
    if (M.empty()) {
        throw DomainError("witness search for the empty support");
    }
    const std::size_t r = I.var_count();
    if (M.max_member() > static_cast<int>(r)) {
        throw DomainError("support member exceeds variable count");
    }

    bool associated = M.is_subset_of(support(I)) && M.size() <= std::min(r, I.gen_count());
    if (associated) {
        MonomialIdeal restricted = localize(I, M);
        associated = !restricted.is_unit() && max_ideal_associated(restricted);
    }
    if (!associated) {
        return WitnessResult{WitnessStatus::not_associated, std::nullopt};
    }

    Integer side = box_side.value_or(stats(I).max_degree + Integer(r));
    MonomialIdeal target = prime_ideal(r, M);
    WitnessResult result{WitnessStatus::cap_exceeded, std::nullopt};
    detail::search_box_by_degree(r, side, [&](const std::vector<Integer>& a) {
        ExponentVector cand{std::vector<Integer>(a)};
        if (colon_monomial(I, cand) == target) {
            result = WitnessResult{WitnessStatus::found, std::move(cand)};
            return true;
        }
        return false;
    });
    return result;
}

} // namespace monpow
