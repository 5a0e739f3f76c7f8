#pragma once

#include "monpow/assoc.hpp"
#include "monpow/errors.hpp"
#include "monpow/exponent_vector.hpp"
#include "monpow/ideal.hpp"
#include "monpow/integer.hpp"
#include "monpow/linsys.hpp"
#include "monpow/parse.hpp"
#include "monpow/powers.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace monpow {

/// Outcome of an oracle suite: how many individual checks ran and a
/// description of every disagreement found.
struct SuiteResult {
    std::uint64_t checks = 0;
    std::vector<std::string> mismatches;

    bool ok() const { return mismatches.empty(); }

    void merge(SuiteResult other) {
        checks += other.checks;
        for (std::string& m : other.mismatches) {
            mismatches.push_back(std::move(m));
        }
    }
};

namespace detail {
/// Visit every h in [0, side]^r (plain odometer order).
inline void for_each_in_box(std::size_t r, const Integer& side, const auto& fn) {
    std::vector<Integer> h(r, Integer(0));
    while (true) {
        fn(h);
        std::size_t pos = 0;
        while (pos < r && h[pos] == side) {
            h[pos] = 0;
            ++pos;
        }
        if (pos == r) {
            return;
        }
        h[pos] += 1;
    }
}

inline std::string describe(const MonomialIdeal& I) {
    return format_ideal(I, default_var_names(I.var_count()));
}
} // namespace detail

/// The four equivalent conditions for the maximal ideal to be associated to
/// I^n, evaluated independently for every n up to n_max:
///   (1) the localization/shortcut route,
///   (2) I^n : m != I^n,
///   (3) sat(I^n) != I^n,
///   (4) sat(I^n) intersected with I^{n-1} != I^n.
/// Any disagreement is a bug in one of the routes.
inline SuiteResult characterization_suite(const MonomialIdeal& I, unsigned n_max) {
    detail::require_proper_nonzero(I, "characterization_suite");
    SuiteResult result;
    const MonomialIdeal m = maximal_ideal(I.var_count());
    MonomialIdeal previous = MonomialIdeal::unit(I.var_count());
    MonomialIdeal current = I;
    for (unsigned n = 1; n <= n_max; ++n) {
        if (n > 1) {
            previous = std::move(current);
            current = product(previous, I);
        }
        bool c1 = max_ideal_associated(current);
        bool c2 = colon_ideal(current, m) != current;
        MonomialIdeal sat = saturation(current);
        bool c3 = sat != current;
        bool c4 = intersect(sat, previous) != current;
        result.checks += 4;
        if (c1 != c2 || c2 != c3 || c3 != c4) {
            std::ostringstream os;
            os << "characterization mismatch for " << detail::describe(I) << " at n=" << n
               << ": associated=" << c1 << " colon=" << c2 << " sat=" << c3
               << " sat-cap=" << c4;
            result.mismatches.push_back(os.str());
        }
    }
    return result;
}

/// Feasibility of the power / colon systems against ideal membership, for
/// every monomial in the box [0, 2nd]^r and every power up to n_max.
inline SuiteResult system_oracle_suite(const MonomialIdeal& I, unsigned n_max) {
    detail::require_proper_nonzero(I, "system_oracle_suite");
    SuiteResult result;
    const std::size_t r = I.var_count();
    const Integer d = stats(I).max_degree;
    const MonomialIdeal m = maximal_ideal(r);
    const IneqSystem power_sys = build_power_system(I);
    const IneqSystem colon_sys = build_colon_system(I);
    MonomialIdeal current = I;
    for (unsigned n = 1; n <= n_max; ++n) {
        if (n > 1) {
            current = product(current, I);
        }
        const MonomialIdeal colon = colon_ideal(current, m);
        const Integer side = 2 * Integer(n) * d;
        detail::for_each_in_box(r, side, [&](const std::vector<Integer>& h) {
            ExponentVector u{std::vector<Integer>(h)};
            bool power_feasible = feasible(power_sys, u, Integer(n));
            bool in_power = contains(current, u);
            bool colon_feasible = feasible(colon_sys, u, Integer(n));
            bool in_colon = contains(colon, u);
            result.checks += 2;
            if (power_feasible != in_power || colon_feasible != in_colon) {
                std::ostringstream os;
                os << "system mismatch for " << detail::describe(I) << " at n=" << n
                   << " h=" << u << ": power " << power_feasible << "/" << in_power
                   << " colon " << colon_feasible << "/" << in_colon;
                result.mismatches.push_back(os.str());
            }
        });
    }
    return result;
}

/// Dividing out the common divisor of the generators changes no associated
/// primes beyond single-variable ones.
inline SuiteResult gcd_shift_suite(const MonomialIdeal& I, unsigned n_max) {
    detail::require_proper_nonzero(I, "gcd_shift_suite");
    SuiteResult result;
    GcdReduction red = gcd_reduce(I);
    MonomialIdeal current = I;
    MonomialIdeal current_red = red.reduced;
    for (unsigned n = 1; n <= n_max; ++n) {
        if (n > 1) {
            current = product(current, I);
            current_red = product(current_red, red.reduced);
        }
        AssSet a = ass(current).without_singletons();
        AssSet b = current_red.is_proper_nonzero()
                       ? ass(current_red).without_singletons()
                       : AssSet{};
        ++result.checks;
        if (!(a == b)) {
            std::ostringstream os;
            os << "gcd-shift mismatch for " << detail::describe(I) << " at n=" << n << ": "
               << a << " vs " << b;
            result.mismatches.push_back(os.str());
        }
    }
    return result;
}

/// Search the scale N (doubling from 1 up to the cap) for which the scaled
/// colon system agrees with membership in sat(I^n) everywhere in the box
/// [0, side]^r. The right scale depends on the ideal, the power and the
/// box; only its existence matters.
inline std::optional<Integer> find_saturation_scale(const MonomialIdeal& I, unsigned n,
                                                    const Integer& side,
                                                    const Integer& scale_cap = Integer(64)) {
    detail::require_proper_nonzero(I, "find_saturation_scale");
    const MonomialIdeal sat = saturation(power(I, n));
    for (Integer scale = 1; scale <= scale_cap; scale *= 2) {
        const IneqSystem sys = build_sat_system(I, scale);
        bool all_match = true;
        detail::for_each_in_box(I.var_count(), side, [&](const std::vector<Integer>& h) {
            if (!all_match) {
                return;
            }
            ExponentVector u{std::vector<Integer>(h)};
            if (feasible(sys, u, Integer(n)) != contains(sat, u)) {
                all_match = false;
            }
        });
        if (all_match) {
            return scale;
        }
    }
    return std::nullopt;
}

} // namespace monpow
