#include "monpow/bounds.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace monpow;
using test::make_ideal;

TEST_CASE("sigma1 matches direct substitution") {
    // (d,s,r) = (5,5,3): squared = 25 * 625 * 3^4 * 50^16, i.e. 1125 * 50^8 unsquared
    BoundValue b = sigma1(5, 5, 3);
    Integer expected = Integer(25) * 625 * int_pow(Integer(3), 4) * int_pow(Integer(50), 16);
    CHECK(b.squared == expected);
    CHECK(b.ceiling == Integer(1125) * int_pow(Integer(50), 8));

    Integer threshold("40000000000000000"); // 4 * 10^16
    CHECK(b.squared > threshold * threshold);

    BoundValue tiny = sigma1(1, 1, 1);
    CHECK(tiny.squared == 9);
    CHECK(tiny.ceiling == 3);

    CHECK(sigma1(5, 5, 3).squared < sigma1(6, 5, 3).squared);
    CHECK_THROWS_AS(sigma1(0, 1, 1), DomainError);
}

TEST_CASE("sigma2 matches direct substitution") {
    BoundValue tiny = sigma2(1, 1, 1);
    CHECK(tiny.squared == 32); // 2^1 * 1^3 * 4^2
    CHECK(tiny.ceiling == 6);

    BoundValue b = sigma2(5, 5, 3);
    Integer expected = int_pow(Integer(26), 15) * int_pow(Integer(3), 5) * 400;
    CHECK(b.squared == expected);

    // the running example's headline ratio: sigma1 beats sigma2 by more
    // than 10^3, i.e. by 10^6 on squares
    CHECK(sigma1(5, 5, 3).squared > Integer(1000000) * b.squared);
}

TEST_CASE("sigma2 is non-decreasing in every argument") {
    for (long d = 1; d <= 8; ++d) {
        for (std::size_t s = 1; s <= 8; ++s) {
            for (std::size_t r = 1; r <= 8; ++r) {
                Integer here = sigma2(d, s, r).squared;
                CHECK(here <= sigma2(d + 1, s, r).squared);
                CHECK(here <= sigma2(d, s + 1, r).squared);
                CHECK(here <= sigma2(d, s, r + 1).squared);
            }
        }
    }
}

TEST_CASE("comparison chain over the parameter grid") {
    for (long d = 2; d <= 8; ++d) {
        for (std::size_t r = 2; r <= 6; ++r) {
            for (std::size_t s = r; s <= 6; ++s) {
                BoundComparison cmp = compare(d, s, r);
                CHECK(cmp.chain_left_strict);
                CHECK(cmp.chain_right);
                CHECK(cmp.order == 1);
            }
        }
    }
}

TEST_CASE("the explicit values in the comparison argument") {
    // q(2)^10 = (8/5)^5 > 10
    Rational q2 = q_squared(2);
    CHECK(q2 == Rational(8, 5));
    Rational q10 = Rational(int_pow(Integer(8), 5), int_pow(Integer(5), 5));
    CHECK(q10 == Rational(32768, 3125));
    CHECK(q10 > 10);

    // phi(2) = 64/50 > 1
    Rational phi2 = phi_squared(2);
    CHECK(phi2 == Rational(Integer(64) * 64, Integer(50) * 50));
    CHECK(phi2 > 1);
}

TEST_CASE("bound report on concrete ideals") {
    BoundReport r1 = bound_report(test::example_ideal());
    CHECK(r1.stats.reduced_max_degree == 5);
    CHECK(r1.reduced_var_count == 3);
    CHECK(r1.sigma1_reduced.squared == sigma1(5, 5, 3).squared);
    CHECK(r1.sigma2_reduced.squared == sigma2(5, 5, 3).squared);
    CHECK_FALSE(r1.principal_trivial);
    CHECK_FALSE(r1.reduced_degree_clamped);
    CHECK(r1.squared_ratio_reduced ==
          Rational(sigma1(5, 5, 3).squared, sigma2(5, 5, 3).squared));

    BoundReport r2 = bound_report(make_ideal(2, {{2, 1}, {1, 2}}));
    CHECK(r2.stats.reduced_max_degree == 1);
    CHECK(r2.reduced_var_count == 2);
    CHECK(r2.sigma2_reduced.squared == sigma2(1, 2, 2).squared);

    BoundReport r3 = bound_report(make_ideal(2, {{3, 4}}));
    CHECK(r3.principal_trivial);
    CHECK(r3.reduced_degree_clamped);
    CHECK(r3.sigma2_reduced.squared == sigma2(1, 1, 1).squared);
}

TEST_CASE("ceiling is the exact integer ceiling of the square root") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<long> small(0, 1000000);
    for (int it = 0; it < 500; ++it) {
        Integer squared(small(rng));
        if (it % 3 == 0) {
            squared *= squared; // perfect squares included
        }
        if (it % 5 == 0) {
            squared *= Integer("12345678901234567890123456789");
        }
        BoundValue b = make_bound(squared, "probe");
        CHECK(b.ceiling * b.ceiling >= b.squared);
        if (b.squared > 0) {
            CHECK((b.ceiling - 1) * (b.ceiling - 1) < b.squared);
        }
    }
}
