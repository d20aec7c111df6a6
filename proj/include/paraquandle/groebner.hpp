// paraquandle — lexicographic Groebner bases and zero-dimensional utilities.
// SPDX-License-Identifier: MIT
#pragma once

#include <map>
#include <vector>

#include "paraquandle/errors.hpp"
#include "paraquandle/mpoly.hpp"

namespace pq {

/// Resource limits for basis computation. The wall-clock budget defaults to
/// the PARAQUANDLE_TIME_BUDGET environment variable (seconds), else 900.
struct GroebnerOptions {
    size_t max_basis_terms = 1'000'000;
    double time_budget_sec = -1;  // <0: resolve from the environment

    static GroebnerOptions defaults();
};

/// Reduced monic lexicographic Groebner basis (Buchberger with the coprimality
/// and chain criteria, normal pair selection, primitive intermediate polys).
/// Elements are sorted by descending leading monomial. Throws ResourceError
/// when limits are exceeded.
std::vector<MPoly> groebner_basis(std::vector<MPoly> gens,
                                  const GroebnerOptions& opts = GroebnerOptions::defaults());

/// Fully reduced normal form of f modulo a (Groebner) basis.
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& gb);

/// True iff gb generates the unit ideal.
bool is_unit_ideal(const std::vector<MPoly>& gb);

/// True iff every ring variable has a pure-power leading monomial in gb
/// (Q-vector-space dimension of the quotient is finite).
bool is_zero_dimensional(const std::vector<MPoly>& gb);

/// Monomials outside the leading-term staircase, ascending lex. Throws
/// SolveError if the ideal is not zero-dimensional.
std::vector<Mono> standard_monomials(const std::vector<MPoly>& gb);

/// The unique monic generator of (ideal) ∩ Q[main_var] for a zero-dimensional
/// reduced basis; UPoly(1) for the unit ideal. Throws SolveError when no
/// univariate element exists.
UPoly eliminant(const std::vector<MPoly>& gb, size_t main_var);

/// Monic minimal polynomial of h as an operator on the quotient algebra.
UPoly minimal_polynomial(const MPoly& h, const std::vector<MPoly>& gb);

/// Shape-position view of a reduced lex basis over `main_var`: one univariate
/// eliminant plus `var - f(main_var)` rewrites for every other ring variable.
struct Shape {
    size_t main_var = 0;
    UPoly elim;                       // monic
    std::map<size_t, UPoly> assign;   // var index -> image in Q[main_var]
};

/// Extract the Shape or throw ShapeError if the basis has any other form.
Shape shape_extract(const std::vector<MPoly>& gb, size_t main_var);

/// Evaluate p in the residue ring Q[main]/(elim) by substituting every
/// non-main variable through the shape assignments and reducing.
UPoly shape_eval(const MPoly& p, const Shape& s);

}  // namespace pq
