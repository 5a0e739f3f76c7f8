#pragma once

#include "monpow/errors.hpp"
#include "monpow/ideal.hpp"
#include "monpow/integer.hpp"

#include <cstddef>
#include <string>
#include <utility>

namespace monpow {

/// An exact bound value. The bounds contain square-root factors, so the
/// stored quantity is the exact integer square; `ceiling` is the smallest
/// integer k with k^2 >= squared, which is the usable integer bound.
struct BoundValue {
    Integer squared;
    Integer ceiling;
    std::string label;
};

inline BoundValue make_bound(Integer squared, std::string label) {
    Integer c = ceil_sqrt(squared);
    return BoundValue{std::move(squared), std::move(c), std::move(label)};
}

namespace detail {
inline void require_bound_args(const Integer& max_degree, std::size_t gen_count,
                               std::size_t var_count) {
    if (max_degree < 1 || gen_count < 1 || var_count < 1) {
        throw DomainError("bound parameters must be >= 1");
    }
}
inline std::string bound_label(const char* name, const Integer& d, std::size_t s,
                               std::size_t r) {
    return std::string(name) + "(" + d.str() + "," + std::to_string(s) + "," +
           std::to_string(r) + ")";
}
} // namespace detail

/// Squared value of d*(rs+s+d)*(sqrt r)^(r+1)*(sqrt 2 * d)^((r+1)(s-1)).
inline BoundValue sigma1(const Integer& max_degree, std::size_t gen_count,
                         std::size_t var_count) {
    detail::require_bound_args(max_degree, gen_count, var_count);
    const Integer& d = max_degree;
    const Integer s(gen_count), r(var_count);
    Integer linear = r * s + s + d;
    Integer squared = d * d * linear * linear * int_pow(r, var_count + 1) *
                      int_pow(2 * d * d, (var_count + 1) * (gen_count - 1));
    return make_bound(std::move(squared),
                      detail::bound_label("sigma1", max_degree, gen_count, var_count));
}

/// Squared value of (sqrt(d^2+1))^(rs)*(sqrt r)^(r+2)*(rs+r+2).
inline BoundValue sigma2(const Integer& max_degree, std::size_t gen_count,
                         std::size_t var_count) {
    detail::require_bound_args(max_degree, gen_count, var_count);
    const Integer& d = max_degree;
    const Integer r(var_count);
    Integer linear = r * Integer(gen_count) + r + 2;
    Integer squared = int_pow(d * d + 1, var_count * gen_count) *
                      int_pow(r, var_count + 2) * linear * linear;
    return make_bound(std::move(squared),
                      detail::bound_label("sigma2", max_degree, gen_count, var_count));
}

/// q(d)^2 = 2d^2/(d^2+1), the squared ratio that drives the comparison of
/// the two bounds.
inline Rational q_squared(const Integer& max_degree) {
    if (max_degree < 1) {
        throw DomainError("q is defined for degrees >= 1");
    }
    return Rational(2 * max_degree * max_degree, max_degree * max_degree + 1);
}

/// phi(r)^2 = q(2)^(2 r^2) / (2r), the worst case of the comparison chain
/// over all s >= r at degree 2.
inline Rational phi_squared(std::size_t var_count) {
    if (var_count < 1) {
        throw DomainError("phi is defined for var counts >= 1");
    }
    std::size_t e = var_count * var_count;
    return Rational(int_pow(Integer(8), e), int_pow(Integer(5), e) * 2 * Integer(var_count));
}

/// Exact comparison of the two bounds at shared parameters, including the
/// intermediate quantity q(d)^(rs)/sqrt(2r) * sigma2 of the comparison
/// chain, everything in squared form so all values are rational.
struct BoundComparison {
    BoundValue sigma1_value;
    BoundValue sigma2_value;
    Rational q_sq;             // q(d)^2
    Rational middle_squared;   // q(d)^(2rs) * sigma2^2 / (2r)
    int order = 0;             // sign of sigma1^2 - sigma2^2
    bool chain_left_strict = false; // sigma2^2 <  middle
    bool chain_right = false;       // middle   <= sigma1^2
};

inline BoundComparison compare(const Integer& max_degree, std::size_t gen_count,
                               std::size_t var_count) {
    BoundComparison cmp;
    cmp.sigma1_value = sigma1(max_degree, gen_count, var_count);
    cmp.sigma2_value = sigma2(max_degree, gen_count, var_count);
    cmp.q_sq = q_squared(max_degree);
    const std::size_t rs = var_count * gen_count;
    const Integer& d = max_degree;
    cmp.middle_squared = Rational(int_pow(2 * d * d, rs) * cmp.sigma2_value.squared,
                                  int_pow(d * d + 1, rs) * 2 * Integer(var_count));
    if (cmp.sigma1_value.squared < cmp.sigma2_value.squared) {
        cmp.order = -1;
    } else if (cmp.sigma2_value.squared < cmp.sigma1_value.squared) {
        cmp.order = 1;
    }
    cmp.chain_left_strict = Rational(cmp.sigma2_value.squared) < cmp.middle_squared;
    cmp.chain_right = cmp.middle_squared <= Rational(cmp.sigma1_value.squared);
    return cmp;
}

/// Both bounds for a concrete ideal, at the raw parameters (d, s, r) and at
/// the reduced parameters (d_red, s, min(r, s)). The reduced values are the
/// ones that actually bound the copersistence index.
struct BoundReport {
    IdealStats stats;
    std::size_t reduced_var_count = 0; // min(r, s)
    BoundValue sigma1_raw;
    BoundValue sigma2_raw;
    BoundValue sigma1_reduced;
    BoundValue sigma2_reduced;
    Rational squared_ratio_reduced; // sigma1^2 / sigma2^2 at reduced parameters
    // A single-generator ideal in >= 2 variables has copersistence index 1:
    // no support of size >= 2 is ever associated.
    bool principal_trivial = false;
    // d_red can be 0 (principal ideals reduce to the unit ideal); the bound
    // formulas need d >= 1, and both are non-decreasing in d, so evaluating
    // at max(d_red, 1) still bounds the copersistence index.
    bool reduced_degree_clamped = false;
};

inline BoundReport bound_report(const MonomialIdeal& I) {
    BoundReport report;
    report.stats = stats(I);
    const IdealStats& st = report.stats;
    report.reduced_var_count = std::min(st.var_count, st.gen_count);
    report.sigma1_raw = sigma1(st.max_degree, st.gen_count, st.var_count);
    report.sigma2_raw = sigma2(st.max_degree, st.gen_count, st.var_count);
    Integer reduced_degree = st.reduced_max_degree;
    if (reduced_degree < 1) {
        reduced_degree = 1;
        report.reduced_degree_clamped = true;
    }
    report.sigma1_reduced = sigma1(reduced_degree, st.gen_count, report.reduced_var_count);
    report.sigma2_reduced = sigma2(reduced_degree, st.gen_count, report.reduced_var_count);
    report.squared_ratio_reduced =
        Rational(report.sigma1_reduced.squared, report.sigma2_reduced.squared);
    report.principal_trivial = st.gen_count == 1 && st.var_count >= 2;
    return report;
}

} // namespace monpow
