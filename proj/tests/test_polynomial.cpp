#include <random>

#include "doctest.h"
#include "support.hpp"

#include "schub/polynomial.hpp"

using namespace schub;

TEST_CASE("basic arithmetic and normal form") {
    const Polynomial x1 = Polynomial::variable(1);
    const Polynomial x2 = Polynomial::variable(2);
    CHECK((x1 - x1).is_zero());
    CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
    CHECK(Polynomial(0).is_zero());
    CHECK(Polynomial::monomial({1, 0, 0}) == x1); // trailing zeros trimmed
    CHECK((x1 * x2).nvars() == 2);
    CHECK(Polynomial(7).nvars() == 0);
}

TEST_CASE("ring laws on random triples") {
    std::mt19937 rng(20240817);
    for (int iter = 0; iter < 200; ++iter) {
        const Polynomial f = testing::random_polynomial(rng);
        const Polynomial g = testing::random_polynomial(rng);
        const Polynomial h = testing::random_polynomial(rng);
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f + g) + h == f + (g + h));
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f - f).is_zero());
    }
}

TEST_CASE("evaluate_all_ones") {
    CHECK(Polynomial().evaluate_all_ones() == 0);
    const Polynomial f = Polynomial::variable(1) * Polynomial::variable(2) * Int(3) +
                         Polynomial::variable(4);
    CHECK(f.evaluate_all_ones() == 4);
}

TEST_CASE("homogeneity and positivity checks") {
    const Polynomial f =
        Polynomial::variable(1) * Polynomial::variable(2) + Polynomial::variable(3) * Polynomial::variable(3);
    CHECK(f.is_homogeneous(2));
    CHECK_FALSE((f + Polynomial::variable(1)).is_homogeneous(2));
    CHECK(f.has_nonnegative_coefficients());
    CHECK_FALSE((f - Polynomial::variable(5)).has_nonnegative_coefficients());
}

TEST_CASE("canonical term order") {
    // degree ascending first, then lexicographically descending exponents
    CHECK(term_order_less({1}, {1, 1}));
    CHECK(term_order_less({2, 1}, {2, 0, 1}));
    CHECK_FALSE(term_order_less({2, 0, 1}, {2, 1}));
}
