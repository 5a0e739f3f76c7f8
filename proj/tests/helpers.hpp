#pragma once

#include "monpow/assoc.hpp"
#include "monpow/exponent_vector.hpp"
#include "monpow/ideal.hpp"
#include "monpow/integer.hpp"

#include <atomic>
#include <cstddef>
#include <initializer_list>
#include <random>
#include <thread>
#include <vector>

namespace test {

inline monpow::ExponentVector ev(std::initializer_list<long> entries) {
    std::vector<monpow::Integer> e;
    e.reserve(entries.size());
    for (long v : entries) {
        e.push_back(monpow::Integer(v));
    }
    return monpow::ExponentVector(std::move(e));
}

inline monpow::MonomialIdeal make_ideal(std::size_t vars,
                                        std::initializer_list<std::initializer_list<long>> gens) {
    std::vector<monpow::ExponentVector> list;
    for (const auto& g : gens) {
        list.push_back(ev(g));
    }
    return monpow::minimalize(vars, std::move(list));
}

// Parenthesized construction helpers; commas inside doctest macros must sit
// inside parentheses.
inline monpow::PrimeSupport ps(std::initializer_list<int> members) {
    return monpow::PrimeSupport(members);
}

inline monpow::AssSet aset(std::initializer_list<monpow::PrimeSupport> primes) {
    return monpow::AssSet(std::vector<monpow::PrimeSupport>(primes));
}

// The running example ideal (x1^4, x1^3 x2, x1^2 x2^2 x3, x1 x2^3, x2^4).
inline monpow::MonomialIdeal example_ideal() {
    return make_ideal(3, {{4, 0, 0}, {3, 1, 0}, {2, 2, 1}, {1, 3, 0}, {0, 4, 0}});
}

// Deterministic generator of small proper nonzero ideals: r <= 3 variables,
// s <= 4 generators, all exponents <= 3. A third of the ideals get a common
// monomial factor so that gcd reduction is exercised.
class IdealSuite {
  public:
    explicit IdealSuite(unsigned seed) : rng_(seed) {}

    monpow::MonomialIdeal next() {
        while (true) {
            std::size_t r = pick(1, 3);
            std::size_t s = pick(1, 4);
            std::vector<monpow::ExponentVector> gens;
            for (std::size_t i = 0; i < s; ++i) {
                std::vector<monpow::Integer> e(r);
                for (std::size_t j = 0; j < r; ++j) {
                    e[j] = monpow::Integer(static_cast<long>(pick(0, 2)));
                }
                gens.push_back(monpow::ExponentVector(std::move(e)));
            }
            if (pick(0, 2) == 0) {
                std::vector<monpow::Integer> t(r);
                for (std::size_t j = 0; j < r; ++j) {
                    t[j] = monpow::Integer(static_cast<long>(pick(0, 1)));
                }
                monpow::ExponentVector shift{std::move(t)};
                for (auto& g : gens) {
                    g = monpow::mul(g, shift);
                }
            }
            monpow::MonomialIdeal I = monpow::minimalize(r, std::move(gens));
            if (I.is_proper_nonzero()) {
                return I;
            }
        }
    }

    std::vector<monpow::MonomialIdeal> take(std::size_t count) {
        std::vector<monpow::MonomialIdeal> out;
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            out.push_back(next());
        }
        return out;
    }

    std::size_t pick(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }

  private:
    std::mt19937 rng_;
};

// Run fn(index) for every index in [0, count), spread over the hardware
// threads. Used for embarrassingly parallel per-ideal checks; callers must
// aggregate into index-addressed slots to stay deterministic.
template <class F>
inline void parallel_for(std::size_t count, F&& fn) {
    unsigned workers = std::thread::hardware_concurrency();
    if (workers < 2 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    unsigned n = std::min<std::size_t>(workers, count);
    for (unsigned t = 0; t < n; ++t) {
        pool.emplace_back([&] {
            while (true) {
                std::size_t i = cursor.fetch_add(1);
                if (i >= count) {
                    return;
                }
                fn(i);
            }
        });
    }
    for (std::thread& th : pool) {
        th.join();
    }
}

// All exponent vectors in [0, side]^r.
inline std::vector<monpow::ExponentVector> box_vectors(std::size_t r, long side) {
    std::vector<monpow::ExponentVector> out;
    std::vector<long> h(r, 0);
    while (true) {
        std::vector<monpow::Integer> e(h.begin(), h.end());
        out.push_back(monpow::ExponentVector(std::move(e)));
        std::size_t pos = 0;
        while (pos < r && h[pos] == side) {
            h[pos] = 0;
            ++pos;
        }
        if (pos == r) {
            return out;
        }
        ++h[pos];
    }
}

// All exponent vectors of total degree <= max_degree.
inline std::vector<monpow::ExponentVector> degree_box(std::size_t r, long max_degree) {
    std::vector<monpow::ExponentVector> out;
    for (const monpow::ExponentVector& v : box_vectors(r, max_degree)) {
        if (v.total_degree() <= max_degree) {
            out.push_back(v);
        }
    }
    return out;
}

} // namespace test
