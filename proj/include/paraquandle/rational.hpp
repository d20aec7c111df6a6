// paraquandle — exact rational scalars.
// SPDX-License-Identifier: MIT
#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace pq {

using Int = mpz_class;
using Rat = mpq_class;  // canonical form: den > 0, gcd(num, den) = 1

// mpq_class(n, d) does not canonicalize on its own; route all num/den
// construction through here.
inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(long num, long den = 1) { return rat(Int(num), Int(den)); }

// Parses "a", "-a", "a/b".
inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

inline Int pow_int(Int base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
    return rat(pow_int(base.get_num(), e), pow_int(base.get_den(), e));
}

}  // namespace pq
