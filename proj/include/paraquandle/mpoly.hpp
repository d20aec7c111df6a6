// paraquandle — sparse multivariate polynomials over Q, lex-ordered.
// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "paraquandle/upoly.hpp"

namespace pq {

/// Hard cap on ring arity; exponents are uint16.
inline constexpr size_t kMaxVars = 8;
using Mono = std::array<uint16_t, kMaxVars>;

/// Variable context. vars[0] has the highest lexicographic precedence; the
/// last variable is the one that survives elimination. Rings are immutable
/// and shared between the polynomials built over them.
struct Ring {
    std::vector<std::string> vars;

    size_t arity() const { return vars.size(); }
    size_t index(const std::string& name) const;  // throws std::out_of_range
    static std::shared_ptr<const Ring> make(std::vector<std::string> names);
};
using RingPtr = std::shared_ptr<const Ring>;

/// Lex comparison: positive when a > b.
int mono_cmp(const Mono& a, const Mono& b);
Mono mono_mul(const Mono& a, const Mono& b);
bool mono_divides(const Mono& a, const Mono& b);  // a | b
Mono mono_div(const Mono& a, const Mono& b);      // a / b, assumes b | a
Mono mono_lcm(const Mono& a, const Mono& b);
int mono_total_degree(const Mono& m);
inline Mono mono_one() { return Mono{}; }

struct Term {
    Mono m{};
    Rat c{0};
};

/// Sparse polynomial: terms sorted in strictly descending lex order, all
/// coefficients nonzero.
class MPoly {
  public:
    MPoly() = default;
    explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}

    static MPoly constant(RingPtr ring, const Rat& c);
    static MPoly var(RingPtr ring, size_t idx, int exp = 1);
    static MPoly var(RingPtr ring, const std::string& name, int exp = 1);
    static MPoly from_terms(RingPtr ring, std::vector<Term> terms);  // any order
    static MPoly from_upoly(RingPtr ring, const UPoly& p, size_t var_idx);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    const Term& lt() const;   // leading term; throws on zero
    const Mono& lm() const { return lt().m; }
    const Rat& lc() const { return lt().c; }

    int degree_in(size_t var) const;
    int total_degree() const;
    /// True iff no variable other than `var` occurs.
    bool univariate_in(size_t var) const;

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Rat& s) const;
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly pow(int e) const;
    /// Substitute one variable by a polynomial of the same ring.
    MPoly subst(size_t var, const MPoly& value) const;
    /// Full evaluation; point indexed by ring position.
    Rat eval(const std::vector<Rat>& point) const;

    /// Conversion to a dense univariate image; throws if another variable
    /// occurs.
    UPoly to_upoly(size_t var) const;

    /// content-free copy: integer coefficients, positive leading coefficient.
    MPoly primitive() const;
    MPoly monic() const;

    /// Deterministic total order (term-by-term).
    int cmp(const MPoly& o) const;

    std::string str() const;

  private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

inline MPoly operator*(const Rat& s, const MPoly& p) { return p * s; }

/// Rebuild p over `target`, matching variables by name. Throws
/// std::out_of_range if a used variable is missing from the target ring.
MPoly transport(const MPoly& p, const RingPtr& target);

}  // namespace pq
