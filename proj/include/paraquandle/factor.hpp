// paraquandle — univariate factorization over Q.
// SPDX-License-Identifier: MIT
#pragma once

#include <vector>

#include "paraquandle/upoly.hpp"

namespace pq {

/// Complete factorization over Q:
///   input == content * prod_i factors[i]^multiplicity[i]
/// with every factor monic and irreducible, listed in ascending UPoly::cmp
/// order. content is just the leading coefficient of the input.
struct Factorization {
    Rat content{0};
    std::vector<UPoly> factors;
    std::vector<int> multiplicity;

    UPoly reassemble() const;
};

/// Zassenhaus factorization (distinct-degree + equal-degree splitting modulo a
/// machine prime, quadratic Hensel lifting, subset recombination under a
/// Mignotte-style bound). Deterministic: the internal randomness is fixed-seed.
/// Throws std::domain_error on the zero polynomial.
Factorization factor_upoly(const UPoly& p);

/// True iff p is irreducible over Q (nonconstant by convention).
bool is_irreducible(const UPoly& p);

}  // namespace pq
