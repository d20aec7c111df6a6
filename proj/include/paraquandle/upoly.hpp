// paraquandle — dense univariate polynomials over Q.
// SPDX-License-Identifier: MIT
#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "paraquandle/rational.hpp"

namespace pq {

/// Dense univariate polynomial with exact rational coefficients.
/// Invariant: no trailing zero coefficients (zero polynomial has empty storage).
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(const Rat& c) { if (c != 0) c_.push_back(c); }
    UPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
    static UPoly from_coeffs(std::vector<Rat> coeffs);
    /// x^k with rational coefficient.
    static UPoly monomial(const Rat& coeff, int k);
    static UPoly x() { return monomial(Rat(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    const Rat& lc() const;                    // leading coefficient; throws on 0
    Rat coeff(int i) const { return (i >= 0 && i < (int)c_.size()) ? c_[i] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }

    UPoly operator-() const;
    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator*(const Rat& s) const;
    UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
    UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
    bool operator==(const UPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UPoly& o) const { return c_ != o.c_; }

    Rat eval(const Rat& x) const;             // Horner
    UPoly compose(const UPoly& inner) const;  // this(inner(x))
    UPoly derivative() const;
    UPoly monic() const;                      // divide by lc; zero stays zero
    UPoly neg_x() const;                      // p(-x)

    /// Euclidean division over Q. Throws on zero divisor.
    struct DivRem;
    DivRem divrem(const UPoly& d) const;
    /// Exact division; throws if the remainder is nonzero.
    UPoly div_exact(const UPoly& d) const;

    /// content/primitive split: *this == content * prim where prim has integer
    /// coefficients, positive leading coefficient, content of 1.
    struct Primitive;
    Primitive primitive() const;

    /// Total-order comparison (degree, then coefficients low to high); used for
    /// deterministic sorting of factor lists and component tables.
    int cmp(const UPoly& o) const;

    std::string str(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Rat> c_;
};

struct UPoly::DivRem { UPoly q, r; };
struct UPoly::Primitive { Rat content; UPoly prim; };

inline UPoly operator*(const Rat& s, const UPoly& p) { return p * s; }

/// Monic gcd via primitive PRS over Z (stable on the coefficient sizes that
/// show up in elimination output). gcd(0,0) = 0.
UPoly upoly_gcd(const UPoly& a, const UPoly& b);

/// Extended Euclid over Q: returns g monic with s*a + t*b = g.
struct UPolyXgcd { UPoly g, s, t; };
UPolyXgcd upoly_xgcd(const UPoly& a, const UPoly& b);

/// Inverse of a modulo m (m irreducible or at least coprime to a); throws if
/// gcd(a, m) is not constant.
UPoly upoly_inverse_mod(const UPoly& a, const UPoly& m);

UPoly upoly_mod(const UPoly& a, const UPoly& m);
UPoly upoly_mulmod(const UPoly& a, const UPoly& b, const UPoly& m);

/// Squarefree part (radical) of p.
UPoly squarefree_part(const UPoly& p);

/// Yun decomposition: p = lc * prod_i sqf[i]^{i+1} with sqf[i] monic squarefree
/// and pairwise coprime (some entries may be 1).
std::vector<UPoly> squarefree_decomposition(const UPoly& p);

}  // namespace pq
