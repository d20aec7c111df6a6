// Tests for univariate factorization over Q.
// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "paraquandle/factor.hpp"

using namespace pq;

namespace {

UPoly up(std::initializer_list<long> ints) {
    std::vector<Rat> c;
    for (long v : ints) c.push_back(Rat(v));
    return UPoly::from_coeffs(std::move(c));
}

}  // namespace

TEST_CASE("known irreducibles stay in one piece") {
    // Eisenstein at 2.
    CHECK(is_irreducible(up({2, 0, 2, 0, 1})));
    CHECK(is_irreducible(up({-2, 0, 1})));
    CHECK(is_irreducible(up({1, 1, 1})));
    CHECK(is_irreducible(up({1, 0, 0, 0, 1})));      // x^4 + 1
    CHECK(is_irreducible(up({1, 0, -10, 0, 1})));    // splits mod every prime
    CHECK(is_irreducible(up({-1, 2, 0, 1})));
    CHECK_FALSE(is_irreducible(up({-1, 0, 1})));
    CHECK_FALSE(is_irreducible(up({7})));
    CHECK_FALSE(is_irreducible(UPoly::x() * up({1, 1})));
}

TEST_CASE("factorization of a transparent product") {
    UPoly f = up({1, 1}) * up({1, 1}) * up({-2, 1}) * up({-2, 1}) * up({-2, 1}) * up({1, 0, 1});
    Factorization fac = factor_upoly(f);
    REQUIRE(fac.factors.size() == 3);
    CHECK(fac.content == 1);
    CHECK(fac.reassemble() == f);
    // Ascending cmp order: degree first, then coefficients low to high.
    CHECK(fac.factors[0] == up({-2, 1}));
    CHECK(fac.multiplicity[0] == 3);
    CHECK(fac.factors[1] == up({1, 1}));
    CHECK(fac.multiplicity[1] == 2);
    CHECK(fac.factors[2] == up({1, 0, 1}));
    CHECK(fac.multiplicity[2] == 1);
}

TEST_CASE("content bookkeeping matches the leading coefficient") {
    UPoly f = up({-1, 4}) * up({-3, 2});  // (4x-1)(2x-3)
    Factorization fac = factor_upoly(f);
    CHECK(fac.content == Rat(8));
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0] == UPoly::from_coeffs({rat(-3, 2), Rat(1)}));
    CHECK(fac.factors[1] == UPoly::from_coeffs({rat(-1, 4), Rat(1)}));
    CHECK(fac.reassemble() == f);

    Factorization c = factor_upoly(UPoly(rat(5, 7)));
    CHECK(c.content == rat(5, 7));
    CHECK(c.factors.empty());
    CHECK_THROWS_AS(factor_upoly(UPoly()), std::domain_error);
}

TEST_CASE("powers of x are stripped exactly") {
    UPoly f = UPoly::x() * UPoly::x() * UPoly::x() * up({-1, 0, 0, 1});
    Factorization fac = factor_upoly(f);
    CHECK(fac.reassemble() == f);
    REQUIRE(fac.factors.size() == 3);
    CHECK(fac.factors[0] == up({-1, 1}));
    CHECK(fac.multiplicity[0] == 1);
    CHECK(fac.factors[1] == UPoly::x());
    CHECK(fac.multiplicity[1] == 3);
}

TEST_CASE("random planted products reassemble and factor completely") {
    std::mt19937_64 rng(0x5eedfac7);
    std::uniform_int_distribution<long> small(-6, 6);
    std::uniform_int_distribution<int> deg(1, 4), mult(1, 3), cnt(1, 3);
    for (int iter = 0; iter < 40; ++iter) {
        UPoly f(Rat(1));
        int planted_deg = 0;
        int pieces = cnt(rng);
        for (int k = 0; k < pieces; ++k) {
            int d = deg(rng);
            std::vector<Rat> c(d + 1);
            for (int i = 0; i < d; ++i) c[i] = Rat(small(rng));
            c[d] = Rat(1);
            UPoly g = UPoly::from_coeffs(std::move(c));
            int m = mult(rng);
            for (int e = 0; e < m; ++e) f *= g;
            planted_deg += d * m;
        }
        Factorization fac = factor_upoly(f);
        CHECK(fac.reassemble() == f);
        int total = 0;
        for (size_t i = 0; i < fac.factors.size(); ++i) {
            total += fac.factors[i].degree() * fac.multiplicity[i];
            CHECK(f.divrem(fac.factors[i]).r.is_zero());
            CHECK(fac.factors[i].lc() == 1);
        }
        CHECK(total == planted_deg);
        // Returned factors are pairwise distinct and individually irreducible.
        for (size_t i = 0; i < fac.factors.size(); ++i) {
            for (size_t j = i + 1; j < fac.factors.size(); ++j)
                CHECK(upoly_gcd(fac.factors[i], fac.factors[j]).degree() == 0);
            if (fac.factors[i].degree() > 1) {
                Factorization sub = factor_upoly(fac.factors[i]);
                CHECK(sub.factors.size() == 1);
                CHECK(sub.multiplicity[0] == 1);
            }
        }
    }
}

TEST_CASE("moderately large swinnerton-dyer style stress input") {
    UPoly f = up({1, 0, -10, 0, 1}) * up({1, 0, 1}) * up({-2, 0, 1}) * up({-3, 0, 1}) * up({1, 1});
    Factorization fac = factor_upoly(f);
    CHECK(fac.reassemble() == f);
    CHECK(fac.factors.size() == 5);
}

TEST_CASE("factorization output is deterministic") {
    UPoly f = up({1, 1, 1}) * up({1, -1, 1}) * up({2, 0, 0, 2, 1}) * up({1, 1, 1});
    Factorization a = factor_upoly(f), b = factor_upoly(f);
    REQUIRE(a.factors.size() == b.factors.size());
    for (size_t i = 0; i < a.factors.size(); ++i) {
        CHECK(a.factors[i] == b.factors[i]);
        CHECK(a.multiplicity[i] == b.multiplicity[i]);
    }
}
