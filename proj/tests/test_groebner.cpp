// Tests for multivariate polynomials and lexicographic Groebner bases.
// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "paraquandle/groebner.hpp"

using namespace pq;

namespace {

RingPtr ring_au() { return Ring::make({"a", "u"}); }
RingPtr ring_abu() { return Ring::make({"a", "b", "u"}); }

struct Gen {
    std::mt19937_64 rng;
    RingPtr ring;
    Gen(uint64_t seed, RingPtr r) : rng(seed), ring(std::move(r)) {}
    Rat coeff() {
        std::uniform_int_distribution<long> d(-5, 5);
        return Rat(d(rng));
    }
    MPoly poly(int max_deg, int max_terms) {
        std::uniform_int_distribution<int> nt(1, max_terms), e(0, max_deg);
        std::vector<Term> ts;
        int n = nt(rng);
        for (int t = 0; t < n; ++t) {
            Mono m{};
            for (size_t v = 0; v < ring->arity(); ++v) m[v] = uint16_t(e(rng));
            ts.push_back({m, coeff()});
        }
        return MPoly::from_terms(ring, std::move(ts));
    }
    UPoly upoly(int deg) {
        std::vector<Rat> c(deg + 1);
        for (auto& x : c) x = coeff();
        c[deg] = Rat(1);
        return UPoly::from_coeffs(std::move(c));
    }
};

}  // namespace

TEST_CASE("lex order ranks earlier ring variables higher") {
    auto R = ring_abu();
    MPoly a = MPoly::var(R, "a"), b = MPoly::var(R, "b"), u = MPoly::var(R, "u");
    CHECK(mono_cmp(a.lm(), b.lm()) > 0);
    CHECK(mono_cmp(b.lm(), u.lm()) > 0);
    CHECK(mono_cmp(u.lm(), mono_one()) > 0);
    // a dominates any pure power of b or u.
    CHECK(mono_cmp(a.lm(), (b * b * u).lm()) > 0);
    // Leading term of a sum picks the lex-largest monomial.
    CHECK((u * u + b).lm() == b.lm());
}

TEST_CASE("mpoly ring axioms on random inputs") {
    Gen g(0x90eb0001, ring_abu());
    for (int i = 0; i < 150; ++i) {
        MPoly a = g.poly(4, 4), b = g.poly(4, 4), c = g.poly(4, 4);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == MPoly(g.ring));
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("evaluation and substitution commute") {
    Gen g(0x90eb0002, ring_abu());
    std::uniform_int_distribution<long> d(-3, 3);
    for (int i = 0; i < 100; ++i) {
        MPoly p = g.poly(3, 4), q = g.poly(2, 3);
        std::vector<Rat> pt{Rat(d(g.rng)), Rat(d(g.rng)), Rat(d(g.rng))};
        for (size_t v = 0; v < 3; ++v) {
            std::vector<Rat> pt2 = pt;
            pt2[v] = q.eval(pt);
            CHECK(p.subst(v, q).eval(pt) == p.eval(pt2));
        }
        CHECK((p * q).eval(pt) == p.eval(pt) * q.eval(pt));
    }
}

TEST_CASE("univariate conversions round-trip") {
    Gen g(0x90eb0003, ring_au());
    for (int i = 0; i < 50; ++i) {
        UPoly p = g.upoly(5);
        MPoly m = MPoly::from_upoly(g.ring, p, 1);
        CHECK(m.univariate_in(1));
        CHECK(m.to_upoly(1) == p);
    }
    MPoly mixed = MPoly::var(ring_au(), "a") * MPoly::var(ring_au(), "u");
    CHECK_THROWS_AS(MPoly(mixed).to_upoly(1), std::domain_error);
}

TEST_CASE("transport matches variables by name") {
    auto R1 = ring_au();
    auto R2 = ring_abu();
    MPoly p = MPoly::var(R1, "a") * MPoly::var(R1, "u", 3) + MPoly::constant(R1, rat(1, 2));
    MPoly q = transport(p, R2);
    CHECK(q.ring() == R2);
    std::vector<Rat> pt{Rat(2), Rat(7), Rat(3)};   // b unused
    CHECK(q.eval(pt) == p.eval({Rat(2), Rat(3)}));
    MPoly back = transport(q, R1);
    CHECK(back == p);
    MPoly uses_b = MPoly::var(R2, "b");
    CHECK_THROWS_AS(transport(uses_b, R1), std::out_of_range);
}

TEST_CASE("string rendering of multivariate terms") {
    auto R = ring_abu();
    MPoly p = MPoly::var(R, "a", 2) * MPoly::var(R, "u") * Rat(3) - MPoly::var(R, "b") * rat(1, 2) + MPoly::constant(R, Rat(1));
    CHECK(p.str() == "3*a^2*u - 1/2*b + 1");
    CHECK(MPoly(R).str() == "0");
}

TEST_CASE("groebner basis of a planted linear system") {
    auto R = ring_au();
    // x + y - 3 and x - y - 1 over {a, u} read as a + u - 3, a - u - 1.
    MPoly a = MPoly::var(R, "a"), u = MPoly::var(R, "u");
    auto gb = groebner_basis({a + u - MPoly::constant(R, Rat(3)),
                              a - u - MPoly::constant(R, Rat(1))});
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == a - MPoly::constant(R, Rat(2)));
    CHECK(gb[1] == u - MPoly::constant(R, Rat(1)));
}

TEST_CASE("groebner basis solves a*u = 1 against u^2 = 2") {
    auto R = ring_au();
    MPoly a = MPoly::var(R, "a"), u = MPoly::var(R, "u");
    auto gb = groebner_basis({a * u - MPoly::constant(R, Rat(1)),
                              u * u - MPoly::constant(R, Rat(2))});
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == a - u * rat(1, 2));
    CHECK(gb[1] == u * u - MPoly::constant(R, Rat(2)));
    CHECK(is_zero_dimensional(gb));
    CHECK(eliminant(gb, 1) == UPoly::from_coeffs({Rat(-2), Rat(0), Rat(1)}));

    auto sm = standard_monomials(gb);
    REQUIRE(sm.size() == 2);
    CHECK(sm[0] == mono_one());
    CHECK(sm[1] == u.lm());

    // a == u/2, so a^2 == 1/2: minimal polynomial x^2 - 1/2.
    UPoly mp = minimal_polynomial(a, gb);
    CHECK(mp == UPoly::from_coeffs({rat(-1, 2), Rat(0), Rat(1)}));
    CHECK(minimal_polynomial(u, gb) == eliminant(gb, 1));
}

TEST_CASE("normal form kills random ideal members") {
    auto R = ring_abu();
    Gen g(0x90eb0004, R);
    MPoly a = MPoly::var(R, "a"), b = MPoly::var(R, "b"), u = MPoly::var(R, "u");
    std::vector<MPoly> gens{a * a - u, b * u - a - MPoly::constant(R, Rat(1)),
                            u * u * u - u - MPoly::constant(R, Rat(2))};
    auto gb = groebner_basis(gens);
    for (int i = 0; i < 40; ++i) {
        MPoly member(R);
        for (const MPoly& gen : gens) member += g.poly(2, 3) * gen;
        CHECK(normal_form(member, gb).is_zero());
        MPoly probe = g.poly(2, 3);
        CHECK(normal_form(member + probe, gb) == normal_form(probe, gb));
    }
    // Idempotence of the reduced basis.
    auto gb2 = groebner_basis(gb);
    REQUIRE(gb.size() == gb2.size());
    for (size_t i = 0; i < gb.size(); ++i) CHECK(gb[i] == gb2[i]);
}

TEST_CASE("planted shape ideals are recovered exactly") {
    auto R = ring_abu();
    Gen g(0x90eb0005, R);
    for (int iter = 0; iter < 25; ++iter) {
        UPoly elim = g.upoly(4);
        if (elim.degree() < 1) continue;
        UPoly fa = g.upoly(3), fb = g.upoly(3);
        MPoly Pg = MPoly::from_upoly(R, elim, 2);
        MPoly Pa = MPoly::var(R, "a") - MPoly::from_upoly(R, fa, 2);
        MPoly Pb = MPoly::var(R, "b") - MPoly::from_upoly(R, fb, 2);
        // Disguise the generators with random combinations.
        MPoly g1 = Pg + g.poly(1, 2) * Pa;
        MPoly g2 = Pa + g.poly(1, 2) * Pb;
        MPoly g3 = Pb;
        auto gb = groebner_basis({g1, g2, g3});
        Shape s = shape_extract(gb, 2);
        CHECK(s.elim == elim.monic());
        CHECK(s.assign.at(0) == fa.divrem(elim).r);
        CHECK(s.assign.at(1) == fb.divrem(elim).r);
    }
}

TEST_CASE("shape extraction rejects non-shape bases") {
    auto R = ring_au();
    MPoly a = MPoly::var(R, "a"), u = MPoly::var(R, "u");
    // a^2 constrained but a not linear in the basis.
    auto gb = groebner_basis({a * a - MPoly::constant(R, Rat(2)),
                              u - MPoly::constant(R, Rat(1))});
    CHECK(is_zero_dimensional(gb));
    CHECK_THROWS_AS(shape_extract(gb, 1), ShapeError);
}

TEST_CASE("unit ideal collapses cleanly") {
    auto R = ring_au();
    MPoly u = MPoly::var(R, "u");
    auto gb = groebner_basis({u, u + MPoly::constant(R, Rat(1))});
    REQUIRE(gb.size() == 1);
    CHECK(is_unit_ideal(gb));
    CHECK(is_zero_dimensional(gb));
    CHECK(standard_monomials(gb).empty());
    CHECK(eliminant(gb, 1) == UPoly(Rat(1)));
}

TEST_CASE("positive-dimensional ideals are detected") {
    auto R = ring_au();
    MPoly a = MPoly::var(R, "a"), u = MPoly::var(R, "u");
    auto gb = groebner_basis({a * u - MPoly::constant(R, Rat(1))});
    CHECK_FALSE(is_zero_dimensional(gb));
    CHECK_THROWS_AS(standard_monomials(gb), SolveError);
}

TEST_CASE("resource budgets abort runaway computations") {
    auto R = ring_abu();
    MPoly a = MPoly::var(R, "a"), b = MPoly::var(R, "b"), u = MPoly::var(R, "u");
    GroebnerOptions tight;
    tight.max_basis_terms = 2;
    tight.time_budget_sec = 900;
    CHECK_THROWS_AS(groebner_basis({a * a * b - u, b * b * u - a - MPoly::constant(R, Rat(1)), u * u * a - b},
                                   tight),
                    ResourceError);
}
