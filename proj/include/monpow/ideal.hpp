#pragma once

#include "monpow/errors.hpp"
#include "monpow/exponent_vector.hpp"
#include "monpow/integer.hpp"
#include "monpow/prime_support.hpp"

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

namespace monpow {

/// A monomial ideal, stored as its unique minimal generating set.
///
/// Canonical form: no generator divides another, generators are sorted in
/// descending lexicographic order (so powers of the first variable come
/// first), all have length r. The unit ideal is { zero vector }, the zero
/// ideal has no generators. Equality is structural.
class MonomialIdeal {
  public:
    MonomialIdeal() = default;

    static MonomialIdeal unit(std::size_t var_count) {
        MonomialIdeal I;
        I.vars_ = var_count;
        I.gens_.push_back(ExponentVector::zero(var_count));
        return I;
    }

    static MonomialIdeal zero(std::size_t var_count) {
        MonomialIdeal I;
        I.vars_ = var_count;
        return I;
    }

    std::size_t var_count() const { return vars_; }
    const std::vector<ExponentVector>& generators() const { return gens_; }
    std::size_t gen_count() const { return gens_.size(); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front().is_zero(); }
    bool is_proper_nonzero() const { return !is_zero() && !is_unit(); }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

    friend MonomialIdeal minimalize(std::size_t var_count, std::vector<ExponentVector> raw);

  private:
    std::size_t vars_ = 0;
    std::vector<ExponentVector> gens_;
};

/// Canonicalize a generating set: drop every vector some other vector
/// divides, sort lexicographically. The generated ideal is unchanged.
inline MonomialIdeal minimalize(std::size_t var_count, std::vector<ExponentVector> raw) {
    for (const ExponentVector& g : raw) {
        if (g.size() != var_count) {
            throw DimensionError("generator length does not match variable count");
        }
    }
    // Scan in ascending total degree: a proper divisor always has smaller
    // degree, so each candidate only needs to be checked against already
    // accepted generators.
    std::vector<std::pair<Integer, ExponentVector>> by_degree;
    by_degree.reserve(raw.size());
    for (ExponentVector& g : raw) {
        by_degree.emplace_back(g.total_degree(), std::move(g));
    }
    std::sort(by_degree.begin(), by_degree.end());
    by_degree.erase(std::unique(by_degree.begin(), by_degree.end()), by_degree.end());

    MonomialIdeal I;
    I.vars_ = var_count;
    for (const auto& [deg, g] : by_degree) {
        bool redundant = false;
        for (const ExponentVector& kept : I.gens_) {
            if (divides(kept, g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) {
            I.gens_.push_back(g);
        }
    }
    std::sort(I.gens_.begin(), I.gens_.end(),
              [](const ExponentVector& a, const ExponentVector& b) { return b < a; });
    return I;
}

namespace detail {
inline void require_same_ring(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.var_count() != J.var_count()) {
        throw DimensionError("ideals live in different polynomial rings");
    }
}
inline void require_length(const MonomialIdeal& I, const ExponentVector& u) {
    if (I.var_count() != u.size()) {
        throw DimensionError("monomial length does not match variable count");
    }
}
inline void require_proper_nonzero(const MonomialIdeal& I, const char* op) {
    if (!I.is_proper_nonzero()) {
        throw DomainError(std::string(op) + " requires a proper nonzero ideal");
    }
}
} // namespace detail

/// Membership: some generator divides u.
inline bool contains(const MonomialIdeal& I, const ExponentVector& u) {
    detail::require_length(I, u);
    for (const ExponentVector& g : I.generators()) {
        if (divides(g, u)) {
            return true;
        }
    }
    return false;
}

/// Containment of ideals, generator-wise.
inline bool contains(const MonomialIdeal& I, const MonomialIdeal& J) {
    detail::require_same_ring(I, J);
    for (const ExponentVector& g : J.generators()) {
        if (!contains(I, g)) {
            return false;
        }
    }
    return true;
}

inline MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
    detail::require_same_ring(I, J);
    std::vector<ExponentVector> sums;
    sums.reserve(I.gen_count() * J.gen_count());
    for (const ExponentVector& g : I.generators()) {
        for (const ExponentVector& h : J.generators()) {
            sums.push_back(mul(g, h));
        }
    }
    return minimalize(I.var_count(), std::move(sums));
}

/// I^n by binary exponentiation, minimalizing after every product.
inline MonomialIdeal power(const MonomialIdeal& I, unsigned n) {
    MonomialIdeal result = MonomialIdeal::unit(I.var_count());
    MonomialIdeal base = I;
    while (n > 0) {
        if (n & 1u) {
            result = product(result, base);
        }
        n >>= 1u;
        if (n > 0) {
            base = product(base, base);
        }
    }
    return result;
}

/// I^n by direct n-fold expansion. Slower than power(); kept as an
/// independent route for cross-checking.
inline MonomialIdeal power_naive(const MonomialIdeal& I, unsigned n) {
    MonomialIdeal result = MonomialIdeal::unit(I.var_count());
    for (unsigned i = 0; i < n; ++i) {
        result = product(result, I);
    }
    return result;
}

inline MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    detail::require_same_ring(I, J);
    std::vector<ExponentVector> lcms;
    lcms.reserve(I.gen_count() * J.gen_count());
    for (const ExponentVector& g : I.generators()) {
        for (const ExponentVector& h : J.generators()) {
            lcms.push_back(lcm(g, h));
        }
    }
    return minimalize(I.var_count(), std::move(lcms));
}

/// I : u for a single monomial u, via lcm(g, u)/u over the generators.
inline MonomialIdeal colon_monomial(const MonomialIdeal& I, const ExponentVector& u) {
    detail::require_length(I, u);
    std::vector<ExponentVector> quotients;
    quotients.reserve(I.gen_count());
    for (const ExponentVector& g : I.generators()) {
        quotients.push_back(div_exact(lcm(g, u), u));
    }
    return minimalize(I.var_count(), std::move(quotients));
}

/// I : J = intersection of I : u over the generators u of J.
inline MonomialIdeal colon_ideal(const MonomialIdeal& I, const MonomialIdeal& J) {
    detail::require_same_ring(I, J);
    if (J.is_zero()) {
        throw DomainError("colon by the zero ideal");
    }
    bool first = true;
    MonomialIdeal result;
    for (const ExponentVector& u : J.generators()) {
        MonomialIdeal part = colon_monomial(I, u);
        result = first ? std::move(part) : intersect(result, part);
        first = false;
    }
    return result;
}

/// I : X_j^infinity. Every generator's j-th exponent is set to zero
/// (1-based variable index).
inline MonomialIdeal saturate_variable(const MonomialIdeal& I, std::size_t var) {
    if (var < 1 || var > I.var_count()) {
        throw DomainError("variable index out of range");
    }
    std::vector<ExponentVector> dropped;
    dropped.reserve(I.gen_count());
    for (const ExponentVector& g : I.generators()) {
        std::vector<Integer> e = g.entries();
        e[var - 1] = 0;
        dropped.push_back(ExponentVector(std::move(e)));
    }
    return minimalize(I.var_count(), std::move(dropped));
}

/// Saturation with respect to the maximal monomial ideal: the intersection
/// of I : X_j^infinity over all variables.
inline MonomialIdeal saturation(const MonomialIdeal& I) {
    if (I.var_count() == 0) {
        return I;
    }
    MonomialIdeal result = saturate_variable(I, 1);
    for (std::size_t j = 2; j <= I.var_count(); ++j) {
        result = intersect(result, saturate_variable(I, j));
    }
    return result;
}

struct GcdReduction {
    MonomialIdeal reduced;
    ExponentVector common_divisor;
};

/// Divide out the greatest common monomial divisor of all generators.
inline GcdReduction gcd_reduce(const MonomialIdeal& I) {
    if (I.is_zero()) {
        throw DomainError("gcd reduction of the zero ideal");
    }
    ExponentVector t = I.generators().front();
    for (std::size_t i = 1; i < I.gen_count(); ++i) {
        t = gcd(t, I.generators()[i]);
    }
    std::vector<ExponentVector> shifted;
    shifted.reserve(I.gen_count());
    for (const ExponentVector& g : I.generators()) {
        shifted.push_back(div_exact(g, t));
    }
    return GcdReduction{minimalize(I.var_count(), std::move(shifted)), std::move(t)};
}

/// Variables dividing at least one minimal generator.
inline PrimeSupport support(const MonomialIdeal& I) {
    std::vector<int> members;
    for (std::size_t i = 0; i < I.var_count(); ++i) {
        for (const ExponentVector& g : I.generators()) {
            if (g[i] > 0) {
                members.push_back(static_cast<int>(i + 1));
                break;
            }
        }
    }
    return PrimeSupport(std::move(members));
}

/// Primary test: for every variable in the support, some generator must be
/// a pure power of that variable.
inline bool is_primary(const MonomialIdeal& I) {
    detail::require_proper_nonzero(I, "is_primary");
    const PrimeSupport sup = support(I);
    for (int var : sup.members()) {
        bool has_pure_power = false;
        for (const ExponentVector& g : I.generators()) {
            if (g[static_cast<std::size_t>(var - 1)] > 0 &&
                g[static_cast<std::size_t>(var - 1)] == g.total_degree()) {
                has_pure_power = true;
                break;
            }
        }
        if (!has_pure_power) {
            return false;
        }
    }
    return true;
}

struct IdealStats {
    std::size_t var_count = 0;       // r
    std::size_t gen_count = 0;       // s
    Integer max_degree;              // d, maximal total degree of a minimal generator
    Integer reduced_max_degree;      // d_red = d minus the degree of the common divisor
    PrimeSupport support;
};

inline IdealStats stats(const MonomialIdeal& I) {
    detail::require_proper_nonzero(I, "stats");
    IdealStats st;
    st.var_count = I.var_count();
    st.gen_count = I.gen_count();
    st.max_degree = 0;
    for (const ExponentVector& g : I.generators()) {
        Integer deg = g.total_degree();
        if (deg > st.max_degree) {
            st.max_degree = deg;
        }
    }
    ExponentVector t = I.generators().front();
    for (std::size_t i = 1; i < I.gen_count(); ++i) {
        t = gcd(t, I.generators()[i]);
    }
    st.reduced_max_degree = st.max_degree - t.total_degree();
    st.support = support(I);
    return st;
}

/// The maximal monomial ideal (X_1, ..., X_r).
inline MonomialIdeal maximal_ideal(std::size_t var_count) {
    if (var_count == 0) {
        throw DomainError("maximal ideal needs at least one variable");
    }
    std::vector<ExponentVector> gens;
    gens.reserve(var_count);
    for (std::size_t j = 1; j <= var_count; ++j) {
        gens.push_back(ExponentVector::unit(var_count, j));
    }
    return minimalize(var_count, std::move(gens));
}

inline std::ostream& operator<<(std::ostream& os, const MonomialIdeal& I) {
    os << "ideal[r=" << I.var_count() << "](";
    for (std::size_t i = 0; i < I.gen_count(); ++i) {
        if (i) {
            os << ", ";
        }
        os << I.generators()[i];
    }
    return os << ")";
}

} // namespace monpow
