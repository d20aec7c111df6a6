// paraquandle — Zassenhaus factorization over Q.
// SPDX-License-Identifier: MIT
//
// Pipeline for a squarefree primitive integer polynomial F:
//   1. pick a machine prime p with p ∤ lc(F) and F squarefree mod p,
//   2. factor F mod p (distinct-degree, then Cantor–Zassenhaus splitting),
//   3. Hensel-lift each modular factor against its cofactor to p^(2^k) beyond
//      a Mignotte-style coefficient bound,
//   4. recombine subsets of lifted factors into true integer divisors.

#include "paraquandle/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace pq {
namespace {

// ----------------------------------------------------------------- GF(p) ---

// Dense polynomials over GF(p) for a fixed odd prime p < 2^62; value vectors
// carry no trailing zeros.
struct Fp {
    uint64_t p;

    uint64_t add(uint64_t a, uint64_t b) const { uint64_t s = a + b; return s >= p ? s - p : s; }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
    uint64_t mul(uint64_t a, uint64_t b) const {
        return (uint64_t)((unsigned __int128)a * b % p);
    }
    uint64_t pow(uint64_t a, uint64_t e) const {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    uint64_t inv(uint64_t a) const { return pow(a, p - 2); }
};

using FpPoly = std::vector<uint64_t>;

void ftrim(FpPoly& f) { while (!f.empty() && f.back() == 0) f.pop_back(); }
int fdeg(const FpPoly& f) { return (int)f.size() - 1; }

FpPoly fmul(const Fp& K, const FpPoly& a, const FpPoly& b) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
    }
    ftrim(r);
    return r;
}

FpPoly fsub(const Fp& K, FpPoly a, const FpPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = K.sub(a[i], b[i]);
    ftrim(a);
    return a;
}

FpPoly fscale(const Fp& K, FpPoly a, uint64_t s) {
    for (auto& c : a) c = K.mul(c, s);
    ftrim(a);
    return a;
}

FpPoly fmonic(const Fp& K, const FpPoly& a) {
    if (a.empty()) return a;
    return fscale(K, a, K.inv(a.back()));
}

// Remainder of a modulo b (b nonzero).
FpPoly fmod(const Fp& K, FpPoly a, const FpPoly& b) {
    uint64_t li = K.inv(b.back());
    while (fdeg(a) >= fdeg(b)) {
        uint64_t f = K.mul(a.back(), li);
        int k = fdeg(a) - fdeg(b);
        for (int i = 0; i <= fdeg(b); ++i) a[k + i] = K.sub(a[k + i], K.mul(f, b[i]));
        ftrim(a);
        if (a.empty()) break;
    }
    return a;
}

FpPoly fdiv(const Fp& K, FpPoly a, const FpPoly& b) {
    uint64_t li = K.inv(b.back());
    FpPoly q(std::max<int>(fdeg(a) - fdeg(b) + 1, 0), 0);
    while (fdeg(a) >= fdeg(b)) {
        uint64_t f = K.mul(a.back(), li);
        int k = fdeg(a) - fdeg(b);
        q[k] = f;
        for (int i = 0; i <= fdeg(b); ++i) a[k + i] = K.sub(a[k + i], K.mul(f, b[i]));
        ftrim(a);
        if (a.empty()) break;
    }
    ftrim(q);
    return q;
}

FpPoly fgcd(const Fp& K, FpPoly a, FpPoly b) {
    while (!b.empty()) {
        FpPoly r = fmod(K, std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return fmonic(K, a);
}

FpPoly fderiv(const Fp& K, const FpPoly& a) {
    FpPoly r;
    for (size_t i = 1; i < a.size(); ++i)
        r.push_back(K.mul(a[i], i % K.p));
    ftrim(r);
    return r;
}

FpPoly fmulmod(const Fp& K, const FpPoly& a, const FpPoly& b, const FpPoly& m) {
    return fmod(K, fmul(K, a, b), m);
}

// a^e mod m with a big exponent.
FpPoly fpowmod(const Fp& K, FpPoly a, const Int& e, const FpPoly& m) {
    FpPoly r{1};
    a = fmod(K, std::move(a), m);
    long bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (long i = bits - 1; i >= 0; --i) {
        r = fmulmod(K, r, r, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = fmulmod(K, r, a, m);
    }
    return r;
}

// ------------------------------------------------- factorization mod p -----

// Distinct-degree split of a monic squarefree f: (factor product, degree).
std::vector<std::pair<FpPoly, int>> ddf(const Fp& K, FpPoly f) {
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly x{0, 1};
    FpPoly h = x;
    int d = 0;
    while (fdeg(f) >= 2 * (d + 1)) {
        ++d;
        h = fpowmod(K, h, Int((unsigned long)K.p), f);
        FpPoly g = fgcd(K, fsub(K, h, x), f);
        if (fdeg(g) > 0) {
            out.push_back({g, d});
            f = fdiv(K, std::move(f), g);
            h = fmod(K, std::move(h), f);
        }
    }
    if (fdeg(f) > 0) out.push_back({f, fdeg(f)});
    return out;
}

// Cantor–Zassenhaus equal-degree splitting of f into irreducibles of degree d.
void edf(const Fp& K, const FpPoly& f, int d, std::mt19937_64& rng,
         std::vector<FpPoly>& out) {
    if (fdeg(f) == d) {
        out.push_back(fmonic(K, f));
        return;
    }
    Int e = (pow_int(Int((unsigned long)K.p), d) - 1) / 2;
    for (;;) {
        FpPoly r(fdeg(f), 0);
        for (auto& c : r) c = rng() % K.p;
        ftrim(r);
        if (fdeg(r) < 1) continue;
        FpPoly g = fgcd(K, r, f);
        if (fdeg(g) == 0) {
            FpPoly s = fpowmod(K, r, e, f);
            if (s.empty()) continue;
            s[0] = K.sub(s[0], 1);
            ftrim(s);
            g = fgcd(K, s, f);
        }
        if (fdeg(g) > 0 && fdeg(g) < fdeg(f)) {
            edf(K, g, d, rng, out);
            edf(K, fdiv(K, f, g), d, rng, out);
            return;
        }
    }
}

// --------------------------------------------------- arithmetic mod p^k ----

using ZmPoly = std::vector<Int>;  // coefficients in [0, m)

Int zmod(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

void ztrim(ZmPoly& f) { while (!f.empty() && f.back() == 0) f.pop_back(); }
int zdeg(const ZmPoly& f) { return (int)f.size() - 1; }

ZmPoly zreduce(ZmPoly f, const Int& m) {
    for (auto& c : f) c = zmod(c, m);
    ztrim(f);
    return f;
}

ZmPoly zmul(const ZmPoly& a, const ZmPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZmPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return zreduce(std::move(r), m);
}

ZmPoly zadd(ZmPoly a, const ZmPoly& b, const Int& m) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return zreduce(std::move(a), m);
}

ZmPoly zsub(ZmPoly a, const ZmPoly& b, const Int& m) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return zreduce(std::move(a), m);
}

// Division by a monic divisor mod m.
struct ZmDivRem { ZmPoly q, r; };
ZmDivRem zdivrem_monic(ZmPoly a, const ZmPoly& b, const Int& m) {
    ZmDivRem out;
    out.q.assign(std::max<int>(zdeg(a) - zdeg(b) + 1, 0), Int(0));
    while (zdeg(a) >= zdeg(b)) {
        int k = zdeg(a) - zdeg(b);
        Int f = a.back();
        out.q[k] = f;
        for (int i = 0; i <= zdeg(b); ++i) a[k + i] = zmod(a[k + i] - f * b[i], m);
        ztrim(a);
    }
    ztrim(out.q);
    out.r = std::move(a);
    return out;
}

// One quadratic Hensel step: from f ≡ g*h (mod m), s*g + t*h ≡ 1 (mod m),
// h monic, to the same data mod m^2.
struct HenselPair { ZmPoly g, h, s, t; };

void hensel_step(const ZmPoly& f, HenselPair& P, const Int& m) {
    Int m2 = m * m;
    ZmPoly e = zsub(zreduce(f, m2), zmul(P.g, P.h, m2), m2);
    auto qr = zdivrem_monic(zmul(P.s, e, m2), P.h, m2);
    ZmPoly g1 = zadd(zadd(P.g, zmul(P.t, e, m2), m2), zmul(qr.q, P.g, m2), m2);
    ZmPoly h1 = zadd(P.h, qr.r, m2);
    ZmPoly b = zsub(zadd(zmul(P.s, g1, m2), zmul(P.t, h1, m2), m2), ZmPoly{Int(1)}, m2);
    auto cd = zdivrem_monic(zmul(P.s, b, m2), h1, m2);
    ZmPoly s1 = zsub(P.s, cd.r, m2);
    ZmPoly t1 = zsub(zsub(P.t, zmul(P.t, b, m2), m2), zmul(cd.q, g1, m2), m2);
    P = {std::move(g1), std::move(h1), std::move(s1), std::move(t1)};
}

// ------------------------------------------------------------ Zassenhaus ---

struct ZView {
    ZmPoly coeffs;  // integer coefficients (no modulus)
    static ZView of(const UPoly& p) {
        ZView v;
        v.coeffs.resize(p.degree() + 1);
        for (int i = 0; i <= p.degree(); ++i) v.coeffs[i] = p.coeff(i).get_num();
        return v;
    }
};

UPoly to_upoly(const ZmPoly& z) {
    std::vector<Rat> c(z.size());
    for (size_t i = 0; i < z.size(); ++i) c[i] = Rat(z[i]);
    return UPoly::from_coeffs(std::move(c));
}

Int sym(const Int& a, const Int& m) {  // symmetric representative in (-m/2, m/2]
    return 2 * a > m ? Int(a - m) : a;
}

// Factor a squarefree primitive integer polynomial (lc > 0, degree >= 1,
// nonzero constant term) into primitive irreducible integer factors.
std::vector<UPoly> zassenhaus(const UPoly& F0) {
    if (F0.degree() == 1) return {F0};
    UPoly F = F0;

    // Prime selection: among the first few usable primes keep the one whose
    // modular factorization is smallest (cheaper recombination).
    Int lc_int = F.lc().get_num();
    Int prime(1u << 29);
    int tried = 0, usable = 0;
    uint64_t best_p = 0;
    std::vector<FpPoly> best_factors;
    while (usable < 3 && tried < 60) {
        mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
        ++tried;
        uint64_t p = mpz_get_ui(prime.get_mpz_t());
        Fp K{p};
        if (mpz_divisible_ui_p(lc_int.get_mpz_t(), p)) continue;
        FpPoly fbar(F.degree() + 1);
        for (int i = 0; i <= F.degree(); ++i)
            fbar[i] = mpz_fdiv_ui(F.coeff(i).get_num().get_mpz_t(), p);
        ftrim(fbar);
        if (fdeg(fbar) != F.degree()) continue;
        if (fdeg(fgcd(K, fbar, fderiv(K, fbar))) != 0) continue;
        ++usable;
        std::mt19937_64 rng(0xfac70e5eedull ^ p);
        std::vector<FpPoly> irr;
        for (auto& [prod, d] : ddf(K, fmonic(K, fbar))) edf(K, prod, d, rng, irr);
        if (best_factors.empty() || irr.size() < best_factors.size()) {
            best_factors = std::move(irr);
            best_p = p;
        }
        if (best_factors.size() == 1) break;
    }
    if (best_factors.empty())
        throw std::logic_error("no usable prime found for factorization");
    if (best_factors.size() == 1) return {F};

    Fp K{best_p};
    std::sort(best_factors.begin(), best_factors.end());

    // Coefficient bound for L * (any factor of F), then the lifting modulus.
    Int maxc(0);
    for (int i = 0; i <= F.degree(); ++i) {
        Int a = abs(F.coeff(i).get_num());
        if (a > maxc) maxc = a;
    }
    int n = F.degree();
    Int bound = Int(n + 1) * pow_int(Int(2), n) * maxc * abs(lc_int);
    Int p_int((unsigned long)best_p);
    int steps = 0;
    Int modulus = p_int;
    while (modulus <= 2 * bound) {
        modulus *= modulus;
        ++steps;
    }

    // Lift every modular factor against its cofactor, independently, to the
    // common modulus p^(2^steps).
    const size_t r = best_factors.size();
    ZmPoly f_int = ZView::of(F).coeffs;
    std::vector<ZmPoly> lifted(r);
    for (size_t i = 0; i < r; ++i) {
        // h = the monic factor being tracked; g = lc * product of the others.
        FpPoly h = best_factors[i];
        FpPoly g{mpz_fdiv_ui(lc_int.get_mpz_t(), best_p)};
        for (size_t j = 0; j < r; ++j)
            if (j != i) g = fmul(K, g, best_factors[j]);
        // Bezout s*g + t*h = 1 over GF(p).
        FpPoly r0 = g, r1 = h, s0{1}, s1{}, t0{}, t1{1};
        while (!r1.empty()) {
            FpPoly q = fdiv(K, r0, r1);
            FpPoly r2 = fsub(K, r0, fmul(K, q, r1));
            FpPoly s2 = fsub(K, s0, fmul(K, q, s1));
            FpPoly t2 = fsub(K, t0, fmul(K, q, t1));
            r0 = std::move(r1); r1 = std::move(r2);
            s0 = std::move(s1); s1 = std::move(s2);
            t0 = std::move(t1); t1 = std::move(t2);
        }
        // EEA on coprime inputs already yields deg s < deg h, deg t < deg g.
        uint64_t gl = K.inv(r0[0]);
        s0 = fscale(K, s0, gl);
        t0 = fscale(K, t0, gl);
        auto to_zm = [](const FpPoly& a) {
            ZmPoly z(a.size());
            for (size_t k = 0; k < a.size(); ++k) z[k] = Int((unsigned long)a[k]);
            return z;
        };
        HenselPair P{to_zm(g), to_zm(h), to_zm(s0), to_zm(t0)};
        Int m = p_int;
        for (int k = 0; k < steps; ++k) {
            hensel_step(f_int, P, m);
            m *= m;
        }
        lifted[i] = P.h;
    }

    // Recombination.
    std::vector<UPoly> out;
    std::vector<size_t> idx(r);
    for (size_t i = 0; i < r; ++i) idx[i] = i;
    Int L = lc_int;
    Int f0 = F.coeff(0).get_num();  // nonzero by precondition

    auto subset_candidate = [&](const std::vector<size_t>& pick) {
        ZmPoly prod{zmod(L, modulus)};
        for (size_t i : pick) prod = zmul(prod, lifted[i], modulus);
        for (auto& c : prod) c = sym(c, modulus);
        return to_upoly(prod);
    };

    size_t card = 1;
    while (2 * card <= idx.size()) {
        bool found = false;
        std::vector<size_t> comb(card);
        for (size_t i = 0; i < card; ++i) comb[i] = i;
        for (;;) {
            std::vector<size_t> pick(card);
            for (size_t i = 0; i < card; ++i) pick[i] = idx[comb[i]];
            // Cheap pruning on the constant coefficient.
            Int t = zmod(L, modulus);
            for (size_t i : pick) t = zmod(t * lifted[i][0], modulus);
            t = sym(t, modulus);
            bool plausible = t != 0 && mpz_divisible_p(Int(L * f0).get_mpz_t(), t.get_mpz_t());
            if (plausible) {
                UPoly cand = subset_candidate(pick).primitive().prim;
                bool divides = true;
                UPoly quo;
                try {
                    quo = F.div_exact(cand);
                } catch (const std::domain_error&) {
                    divides = false;
                }
                if (divides && cand.degree() >= 1) {
                    out.push_back(cand);
                    F = quo;
                    lc_int = L = F.lc().get_num();
                    f0 = F.coeff(0).get_num();
                    std::vector<size_t> rest;
                    for (size_t v : idx)
                        if (std::find(pick.begin(), pick.end(), v) == pick.end())
                            rest.push_back(v);
                    idx = std::move(rest);
                    found = true;
                    break;
                }
            }
            // next combination
            int i = (int)card - 1;
            while (i >= 0 && comb[i] == idx.size() - card + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (size_t j = i + 1; j < card; ++j) comb[j] = comb[j - 1] + 1;
        }
        if (!found) ++card;
    }
    if (F.degree() >= 1) out.push_back(F.primitive().prim);
    return out;
}

}  // namespace

UPoly Factorization::reassemble() const {
    UPoly r(content);
    for (size_t i = 0; i < factors.size(); ++i)
        for (int e = 0; e < multiplicity[i]; ++e) r *= factors[i];
    return r;
}

Factorization factor_upoly(const UPoly& p) {
    if (p.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
    Factorization out;
    out.content = p.lc();
    if (p.degree() == 0) return out;

    UPoly f = p.monic();
    // Strip powers of x first so every remaining constant term is nonzero.
    int xpow = 0;
    while (f.coeff(0) == 0) {
        f = f.div_exact(UPoly::x());
        ++xpow;
    }
    if (xpow > 0) {
        out.factors.push_back(UPoly::x());
        out.multiplicity.push_back(xpow);
    }

    auto parts = squarefree_decomposition(f);
    for (size_t k = 0; k < parts.size(); ++k) {
        if (parts[k].degree() < 1) continue;
        for (const UPoly& zf : zassenhaus(parts[k].primitive().prim)) {
            out.factors.push_back(zf.monic());
            out.multiplicity.push_back((int)k + 1);
        }
    }

    // Deterministic order; duplicates cannot arise (squarefree parts are
    // pairwise coprime) but keep the merge defensive.
    std::vector<size_t> order(out.factors.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return out.factors[a].cmp(out.factors[b]) < 0;
    });
    Factorization sorted;
    sorted.content = out.content;
    for (size_t i : order) {
        if (!sorted.factors.empty() && sorted.factors.back() == out.factors[i]) {
            sorted.multiplicity.back() += out.multiplicity[i];
        } else {
            sorted.factors.push_back(out.factors[i]);
            sorted.multiplicity.push_back(out.multiplicity[i]);
        }
    }
    return sorted;
}

bool is_irreducible(const UPoly& p) {
    if (p.degree() < 1) return false;
    Factorization f = factor_upoly(p);
    return f.factors.size() == 1 && f.multiplicity[0] == 1;
}

}  // namespace pq
