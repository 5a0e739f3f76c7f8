#include "monpow/assoc.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace monpow;
using test::ev;
using test::make_ideal;

namespace {

// Independent route to the associated primes: exhaustive witness search
// using only colon arithmetic. Any witness of p(M) can be truncated
// componentwise to the largest exponent of each variable among the
// generators, so the box below is exhaustive.
AssSet brute_ass(const MonomialIdeal& I) {
    long side = 0;
    for (const ExponentVector& g : I.generators()) {
        for (std::size_t i = 0; i < g.size(); ++i) {
            side = std::max(side, g[i].convert_to<long>());
        }
    }
    std::vector<PrimeSupport> found;
    for (const ExponentVector& a : test::box_vectors(I.var_count(), side)) {
        MonomialIdeal quotient = colon_monomial(I, a);
        if (quotient.is_unit() || quotient.is_zero()) {
            continue;
        }
        bool generated_by_variables = true;
        std::vector<int> members;
        for (const ExponentVector& g : quotient.generators()) {
            if (g.total_degree() != 1) {
                generated_by_variables = false;
                break;
            }
            for (std::size_t i = 0; i < g.size(); ++i) {
                if (g[i] == 1) {
                    members.push_back(static_cast<int>(i + 1));
                }
            }
        }
        if (generated_by_variables) {
            found.push_back(PrimeSupport(std::move(members)));
        }
    }
    return AssSet(std::move(found));
}

} // namespace

TEST_CASE("localization to a subset of the variables") {
    MonomialIdeal I = make_ideal(3, {{1, 1, 0}, {0, 1, 1}}); // (xy, yz)
    CHECK(localize(I, PrimeSupport{2}) == make_ideal(1, {{1}}));
    CHECK(localize(I, PrimeSupport{1, 2, 3}) == I);
    CHECK(localize(I, PrimeSupport{1, 3}) == make_ideal(2, {{1, 0}, {0, 1}}));
    CHECK(localize(I, PrimeSupport{1, 2}) == make_ideal(2, {{0, 1}}));
    CHECK_THROWS_AS(localize(I, PrimeSupport{}), DomainError);
    CHECK_THROWS_AS(localize(I, PrimeSupport{4}), DomainError);
}

TEST_CASE("maximal ideal membership in Ass") {
    CHECK(max_ideal_associated(make_ideal(2, {{1, 0}, {0, 1}})));
    CHECK_FALSE(max_ideal_associated(make_ideal(3, {{1, 1, 0}, {0, 1, 1}})));

    // fewer generators than variables
    CHECK_FALSE(max_ideal_associated(make_ideal(2, {{1, 1}})));
    // a variable missing from the support
    CHECK_FALSE(max_ideal_associated(make_ideal(2, {{2, 0}, {1, 0}, {3, 0}})));

    MonomialIdeal I2 = power(test::example_ideal(), 2);
    CHECK(max_ideal_associated(localize(I2, PrimeSupport{1, 2})));

    CHECK_THROWS_AS(max_ideal_associated(MonomialIdeal::unit(2)), DomainError);
    CHECK_THROWS_AS(max_ideal_associated(MonomialIdeal::zero(2)), DomainError);
}

TEST_CASE("maximal ideal test agrees with the explicit colon computation") {
    test::IdealSuite suite(442200);
    for (int it = 0; it < 60; ++it) {
        MonomialIdeal I = suite.next();
        MonomialIdeal m = maximal_ideal(I.var_count());
        CHECK(max_ideal_associated(I) == (colon_ideal(I, m) != I));
    }
}

TEST_CASE("associated primes") {
    MonomialIdeal I = make_ideal(3, {{1, 1, 0}, {0, 1, 1}});
    AssSet expected = test::aset({test::ps({2}), test::ps({1, 3})});
    CHECK(ass(I) == expected);
    CHECK(ass(I) == brute_ass(I));

    CHECK(ass(make_ideal(3, {{2, 1, 0}})) == test::aset({test::ps({1}), test::ps({2})}));
    CHECK(ass(make_ideal(2, {{1, 0}, {0, 1}})) == test::aset({test::ps({1, 2})}));

    CHECK_THROWS_AS(ass(MonomialIdeal::unit(1)), DomainError);
}

TEST_CASE("associated primes respect both pruning rules") {
    test::IdealSuite suite(90125);
    for (int it = 0; it < 40; ++it) {
        MonomialIdeal I = suite.next();
        AssSet primes = ass(I);
        PrimeSupport sup = support(I);
        for (const PrimeSupport& M : primes.primes()) {
            CHECK(M.size() <= std::min(I.var_count(), I.gen_count()));
            CHECK(M.is_subset_of(sup));
        }
        CHECK(primes == brute_ass(I));
    }
}

TEST_CASE("witness search") {
    MonomialIdeal I = make_ideal(3, {{1, 1, 0}, {0, 1, 1}});

    WitnessResult w = find_witness(I, PrimeSupport{1, 3});
    REQUIRE(w.status == WitnessStatus::found);
    CHECK(*w.witness == ev({0, 1, 0}));

    WitnessResult w2 = find_witness(make_ideal(2, {{1, 0}, {0, 1}}), PrimeSupport{1, 2});
    REQUIRE(w2.status == WitnessStatus::found);
    CHECK(*w2.witness == ev({0, 0}));

    CHECK(find_witness(I, PrimeSupport{1, 2}).status == WitnessStatus::not_associated);

    // a box too small to hold any witness is reported distinctly
    WitnessResult w3 = find_witness(I, PrimeSupport{1, 3}, Integer(0));
    CHECK(w3.status == WitnessStatus::cap_exceeded);

    CHECK_THROWS_AS(find_witness(I, PrimeSupport{}), DomainError);
}

TEST_CASE("witness soundness on random ideals") {
    test::IdealSuite suite(55802);
    for (int it = 0; it < 30; ++it) {
        MonomialIdeal I = suite.next();
        AssSet primes = ass(I);
        for (const PrimeSupport& M : primes.primes()) {
            WitnessResult w = find_witness(I, M);
            if (w.status == WitnessStatus::found) {
                CHECK(colon_monomial(I, *w.witness) == prime_ideal(I.var_count(), M));
            } else {
                CHECK(w.status == WitnessStatus::cap_exceeded);
            }
        }
    }
}

TEST_CASE("the four characterizations of an associated maximal ideal agree") {
    test::IdealSuite suite(37114);
    for (int it = 0; it < 25; ++it) {
        MonomialIdeal I = suite.next();
        MonomialIdeal m = maximal_ideal(I.var_count());
        MonomialIdeal previous = MonomialIdeal::unit(I.var_count());
        MonomialIdeal current = I;
        for (unsigned n = 1; n <= 3; ++n) {
            if (n > 1) {
                previous = current;
                current = product(current, I);
            }
            bool c1 = max_ideal_associated(current);
            bool c2 = colon_ideal(current, m) != current;
            MonomialIdeal sat = saturation(current);
            bool c3 = sat != current;
            bool c4 = intersect(sat, previous) != current;
            CHECK(c1 == c2);
            CHECK(c2 == c3);
            CHECK(c3 == c4);
        }
    }
}

TEST_CASE("common generator divisors do not change non-singleton primes") {
    // (x^2 y, x y^2) = xy * (x, y)
    MonomialIdeal shifted = make_ideal(2, {{2, 1}, {1, 2}});
    MonomialIdeal reduced = gcd_reduce(shifted).reduced;
    for (unsigned n = 1; n <= 3; ++n) {
        CHECK(ass(power(shifted, n)).without_singletons() ==
              ass(power(reduced, n)).without_singletons());
    }

    test::IdealSuite suite(66233);
    for (int it = 0; it < 20; ++it) {
        MonomialIdeal I = suite.next();
        MonomialIdeal red = gcd_reduce(I).reduced;
        for (unsigned n = 1; n <= 3; ++n) {
            AssSet a = ass(power(I, n)).without_singletons();
            AssSet b = red.is_proper_nonzero() ? ass(power(red, n)).without_singletons()
                                               : AssSet{};
            CHECK(a == b);
        }
    }
}
