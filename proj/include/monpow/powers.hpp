#pragma once

#include "monpow/assoc.hpp"
#include "monpow/errors.hpp"
#include "monpow/exponent_vector.hpp"
#include "monpow/ideal.hpp"
#include "monpow/integer.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace monpow {

namespace detail {

/// Decide whether `need` generators (with repetition) can be chosen from
/// `gens` such that their exponent sum stays componentwise below `budget`.
///
/// Depth-first search over non-decreasing generator indices. A solution
/// using more than `need` generators restricts to one with exactly `need`
/// (dropping a factor only shrinks the sum), so searching exact multisets
/// is complete. Pruned by the total-degree bound: the cheapest completion
/// of k missing factors costs k times the smallest generator degree.
class MultisetSearch {
  public:
    explicit MultisetSearch(const std::vector<ExponentVector>& gens) {
        gens_.reserve(gens.size());
        for (const ExponentVector& g : gens) {
            gens_.push_back(g.entries());
        }
        std::sort(gens_.begin(), gens_.end(),
                  [](const auto& a, const auto& b) { return degree_of(a) > degree_of(b); });
        gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
        min_degree_ = 0;
        if (!gens_.empty()) {
            min_degree_ = degree_of(gens_.back());
        }
        degrees_.reserve(gens_.size());
        for (const auto& g : gens_) {
            degrees_.push_back(degree_of(g));
        }
    }

    bool fits(const ExponentVector& budget, const Integer& need) const {
        if (need <= 0) {
            return true;
        }
        if (gens_.empty()) {
            return false;
        }
        if (min_degree_ == 0) {
            return true; // a unit generator absorbs any required count
        }
        std::vector<Integer> b = budget.entries();
        return search(b, budget.total_degree(), need, 0);
    }

  private:
    static Integer degree_of(const std::vector<Integer>& v) {
        Integer d = 0;
        for (const Integer& e : v) {
            d += e;
        }
        return d;
    }

    bool search(std::vector<Integer>& budget, const Integer& budget_degree,
                const Integer& need, std::size_t start) const {
        if (need == 0) {
            return true;
        }
        if (need * min_degree_ > budget_degree) {
            return false;
        }
        for (std::size_t j = start; j < gens_.size(); ++j) {
            const std::vector<Integer>& g = gens_[j];
            bool ok = true;
            for (std::size_t i = 0; i < g.size(); ++i) {
                if (g[i] > budget[i]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) {
                continue;
            }
            for (std::size_t i = 0; i < g.size(); ++i) {
                budget[i] -= g[i];
            }
            bool found = search(budget, budget_degree - degrees_[j], need - 1, j);
            for (std::size_t i = 0; i < g.size(); ++i) {
                budget[i] += g[i];
            }
            if (found) {
                return true;
            }
        }
        return false;
    }

    std::vector<std::vector<Integer>> gens_; // descending total degree, deduplicated
    std::vector<Integer> degrees_;
    Integer min_degree_;
};

} // namespace detail

/// Membership of u in I^n without expanding the power: is there a choice of
/// n generators (with repetition) whose product divides u?
inline bool member_of_power(const MonomialIdeal& I, const ExponentVector& u, const Integer& n) {
    detail::require_length(I, u);
    if (n < 0) {
        throw DomainError("negative power");
    }
    if (n == 0) {
        return true;
    }
    detail::MultisetSearch search(I.generators());
    return search.fits(u, n);
}

/// The sequence of associated primes of I, I^2, ..., I^n_max.
struct AssProfile {
    MonomialIdeal ideal;
    unsigned n_max = 0;
    std::vector<AssSet> sequence; // sequence[i] belongs to the power i+1

    const AssSet& at_power(unsigned n) const { return sequence.at(n - 1); }
};

inline AssProfile ass_sequence(const MonomialIdeal& I, unsigned n_max) {
    detail::require_proper_nonzero(I, "ass_sequence");
    if (n_max < 1) {
        throw DomainError("ass_sequence needs n_max >= 1");
    }
    AssProfile profile{I, n_max, {}};
    profile.sequence.reserve(n_max);
    // Powers are built incrementally; each step is one product with I.
    MonomialIdeal current = I;
    for (unsigned n = 1; n <= n_max; ++n) {
        if (n > 1) {
            current = product(current, I);
        }
        profile.sequence.push_back(ass(current));
    }
    return profile;
}

/// Empirical indices read off a finite profile.
///
/// Each index is the smallest power from which the observed tail is
/// constant / non-decreasing / non-increasing. A value is `confirmed` when
/// the tail it is based on spans at least `confirmation_window` entries;
/// a finite profile can refute but never certify the asymptotic statement,
/// so unconfirmed values are reported as observations only. The same holds
/// for the per-prime values: per_prime_copersistence[M] is the smallest N
/// such that within the observed range the prime never reappears after
/// being absent at some n >= N; it is an empirical surrogate, not a
/// certified copersistence index.
struct IndexReport {
    std::optional<unsigned> stability;
    std::optional<unsigned> persistence;
    std::optional<unsigned> copersistence;
    bool stability_confirmed = false;
    bool persistence_confirmed = false;
    bool copersistence_confirmed = false;
    std::map<PrimeSupport, unsigned> per_prime_copersistence;
    unsigned confirmation_window = 0;
};

inline IndexReport indices(const AssProfile& profile, unsigned confirmation_window = 4) {
    IndexReport report;
    report.confirmation_window = confirmation_window;
    const unsigned n_max = profile.n_max;
    if (n_max == 0 || profile.sequence.size() != n_max) {
        return report;
    }
    const auto& seq = profile.sequence;

    unsigned stab = 1, pers = 1, copers = 1;
    for (unsigned n = 1; n < n_max; ++n) {
        const AssSet& a = seq[n - 1];
        const AssSet& b = seq[n];
        if (!(a == b)) {
            stab = n + 1;
        }
        if (!a.is_subset_of(b)) {
            pers = n + 1;
        }
        if (!b.is_subset_of(a)) {
            copers = n + 1;
        }
    }
    report.stability = stab;
    report.persistence = pers;
    report.copersistence = copers;
    report.stability_confirmed = n_max - stab + 1 >= confirmation_window;
    report.persistence_confirmed = n_max - pers + 1 >= confirmation_window;
    report.copersistence_confirmed = n_max - copers + 1 >= confirmation_window;

    std::vector<PrimeSupport> seen;
    for (const AssSet& s : seq) {
        for (const PrimeSupport& p : s.primes()) {
            seen.push_back(p);
        }
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (const PrimeSupport& p : seen) {
        // Smallest N with no "absent at n1 >= N, present again at n2 > n1".
        unsigned value = 1;
        for (unsigned n1 = 1; n1 < n_max; ++n1) {
            if (!seq[n1 - 1].contains(p)) {
                for (unsigned n2 = n1 + 1; n2 <= n_max; ++n2) {
                    if (seq[n2 - 1].contains(p)) {
                        value = n1 + 1;
                        break;
                    }
                }
            }
        }
        report.per_prime_copersistence.emplace(p, value);
    }
    return report;
}

} // namespace monpow
