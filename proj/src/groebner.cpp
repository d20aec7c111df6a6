// paraquandle — Buchberger engine and zero-dimensional helpers.
// SPDX-License-Identifier: MIT

#include "paraquandle/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <set>

namespace pq {
namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
    size_t max_terms;
    Clock::time_point deadline;

    void check_terms(size_t live_terms) const {
        if (live_terms > max_terms)
            throw ResourceError("basis computation exceeded the term budget");
        if (Clock::now() > deadline)
            throw ResourceError("basis computation exceeded the time budget");
    }
};

// Reduce f by basis (full reduction of every term), keeping results primitive
// to hold coefficient growth down. basis entries must be nonzero.
MPoly reduce_full(MPoly f, const std::vector<MPoly>& basis, const Budget* budget) {
    MPoly rem(f.ring());
    size_t guard = 0;
    while (!f.is_zero()) {
        if (budget && (++guard & 0x3ff) == 0) budget->check_terms(f.term_count());
        bool hit = false;
        for (const MPoly& g : basis) {
            if (!mono_divides(g.lm(), f.lm())) continue;
            Mono q = mono_div(f.lm(), g.lm());
            Rat s = f.lc() / g.lc();
            f -= MPoly::from_terms(f.ring(), {{q, s}}) * g;
            hit = true;
            break;
        }
        if (!hit) {
            // Move the irreducible leading term to the remainder.
            rem += MPoly::from_terms(f.ring(), {{f.lm(), f.lc()}});
            f -= MPoly::from_terms(f.ring(), {{f.lm(), f.lc()}});
        }
    }
    return rem;
}

struct Pair {
    size_t i, j;
    Mono lcm;
    int sugar;  // total degree of the lcm; selection key
};

bool pair_less(const Pair& a, const Pair& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = mono_cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

}  // namespace

GroebnerOptions GroebnerOptions::defaults() {
    GroebnerOptions o;
    if (const char* env = std::getenv("PARAQUANDLE_TIME_BUDGET")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0) o.time_budget_sec = v;
    }
    if (o.time_budget_sec < 0) o.time_budget_sec = 900.0;
    return o;
}

std::vector<MPoly> groebner_basis(std::vector<MPoly> gens, const GroebnerOptions& opts) {
    double budget_sec = opts.time_budget_sec < 0 ? GroebnerOptions::defaults().time_budget_sec
                                                 : opts.time_budget_sec;
    Budget budget{opts.max_basis_terms,
                  Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(budget_sec))};

    std::vector<MPoly> G;
    RingPtr ring;
    for (MPoly& g : gens) {
        if (g.is_zero()) continue;
        ring = g.ring();
        G.push_back(g.primitive());
    }
    if (G.empty()) return {};

    // Constant generator: unit ideal.
    auto unit_check = [&]() -> bool {
        for (const MPoly& g : G)
            if (!g.is_zero() && g.is_constant()) return true;
        return false;
    };
    if (unit_check()) return {MPoly::constant(ring, Rat(1))};

    std::vector<Pair> pairs;
    auto push_pair = [&](size_t i, size_t j) {
        Mono l = mono_lcm(G[i].lm(), G[j].lm());
        // Coprimality criterion: the S-polynomial reduces to zero.
        if (l == mono_mul(G[i].lm(), G[j].lm())) return;
        pairs.push_back({i, j, l, mono_total_degree(l)});
    };
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) push_pair(i, j);

    std::set<std::pair<size_t, size_t>> done;
    while (!pairs.empty()) {
        size_t live = 0;
        for (const MPoly& g : G) live += g.term_count();
        budget.check_terms(live);

        auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
        Pair p = *it;
        pairs.erase(it);
        done.insert({p.i, p.j});

        // Chain criterion: skip when some k with lm(k) | lcm has both pairs
        // already handled.
        bool skip = false;
        for (size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!mono_divides(G[k].lm(), p.lcm)) continue;
            auto key = [&](size_t a, size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (done.count(key(p.i, k)) && done.count(key(k, p.j))) skip = true;
        }
        if (skip) continue;

        const MPoly &f = G[p.i], &g = G[p.j];
        Mono mf = mono_div(p.lcm, f.lm()), mg = mono_div(p.lcm, g.lm());
        MPoly s = MPoly::from_terms(f.ring(), {{mf, Rat(1) / f.lc()}}) * f -
                  MPoly::from_terms(g.ring(), {{mg, Rat(1) / g.lc()}}) * g;
        MPoly h = reduce_full(std::move(s), G, &budget);
        if (h.is_zero()) continue;
        h = h.primitive();
        if (h.is_constant()) return {MPoly::constant(ring, Rat(1))};
        G.push_back(std::move(h));
        for (size_t i = 0; i + 1 < G.size(); ++i) push_pair(i, G.size() - 1);
    }

    // Interreduce: drop elements whose leading monomial is covered, then take
    // each to normal form against the rest.
    std::vector<MPoly> reduced;
    for (size_t i = 0; i < G.size(); ++i) {
        bool covered = false;
        for (size_t j = 0; j < G.size() && !covered; ++j) {
            if (i == j) continue;
            if (mono_divides(G[j].lm(), G[i].lm()) &&
                !(G[j].lm() == G[i].lm() && j > i))
                covered = true;
        }
        if (!covered) reduced.push_back(G[i]);
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i < reduced.size(); ++i) {
            std::vector<MPoly> others;
            for (size_t j = 0; j < reduced.size(); ++j)
                if (j != i) others.push_back(reduced[j]);
            MPoly r = reduce_full(reduced[i], others, &budget);
            if (r.is_zero()) {
                reduced.erase(reduced.begin() + (long)i);
                changed = true;
                break;
            }
            r = r.primitive();
            if (r != reduced[i]) {
                reduced[i] = std::move(r);
                changed = true;
            }
        }
    }
    for (MPoly& g : reduced) g = g.monic();
    std::sort(reduced.begin(), reduced.end(),
              [](const MPoly& a, const MPoly& b) { return mono_cmp(a.lm(), b.lm()) > 0; });
    return reduced;
}

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& gb) {
    return reduce_full(f, gb, nullptr);
}

bool is_unit_ideal(const std::vector<MPoly>& gb) {
    for (const MPoly& g : gb)
        if (!g.is_zero() && g.is_constant()) return true;
    return false;
}

bool is_zero_dimensional(const std::vector<MPoly>& gb) {
    if (gb.empty()) return false;
    if (is_unit_ideal(gb)) return true;
    const RingPtr& ring = gb.front().ring();
    for (size_t v = 0; v < ring->arity(); ++v) {
        bool pure = false;
        for (const MPoly& g : gb) {
            const Mono& m = g.lm();
            if (m[v] == 0) continue;
            bool only_v = true;
            for (size_t i = 0; i < kMaxVars && only_v; ++i)
                if (i != v && m[i] != 0) only_v = false;
            if (only_v) { pure = true; break; }
        }
        if (!pure) return false;
    }
    return true;
}

std::vector<Mono> standard_monomials(const std::vector<MPoly>& gb) {
    if (!is_zero_dimensional(gb))
        throw SolveError("quotient is not finite-dimensional");
    if (is_unit_ideal(gb)) return {};
    const RingPtr& ring = gb.front().ring();
    size_t n = ring->arity();
    // Per-variable exponent caps from the pure-power leading monomials.
    std::vector<int> cap(n, 0);
    for (size_t v = 0; v < n; ++v) {
        for (const MPoly& g : gb) {
            const Mono& m = g.lm();
            bool only_v = m[v] != 0;
            for (size_t i = 0; i < kMaxVars && only_v; ++i)
                if (i != v && m[i] != 0) only_v = false;
            if (only_v) cap[v] = std::max(cap[v], int(m[v]));
        }
    }
    std::vector<Mono> out;
    Mono cur{};
    auto divisible_by_some_lm = [&](const Mono& m) {
        for (const MPoly& g : gb)
            if (mono_divides(g.lm(), m)) return true;
        return false;
    };
    // Enumerate the box below the caps, keep monomials off the staircase.
    std::vector<int> idx(n, 0);
    for (;;) {
        for (size_t v = 0; v < n; ++v) cur[v] = uint16_t(idx[v]);
        if (!divisible_by_some_lm(cur)) out.push_back(cur);
        size_t v = n;
        while (v > 0) {
            --v;
            if (++idx[v] < cap[v]) break;
            idx[v] = 0;
            if (v == 0) {
                std::sort(out.begin(), out.end(),
                          [](const Mono& a, const Mono& b) { return mono_cmp(a, b) < 0; });
                return out;
            }
        }
        if (n == 0) return out;
    }
}

UPoly eliminant(const std::vector<MPoly>& gb, size_t main_var) {
    if (is_unit_ideal(gb)) return UPoly(Rat(1));
    std::vector<UPoly> found;
    for (const MPoly& g : gb)
        if (g.univariate_in(main_var)) found.push_back(g.to_upoly(main_var));
    if (found.empty())
        throw SolveError("no univariate element in the requested variable");
    UPoly e = found[0];
    for (size_t i = 1; i < found.size(); ++i) e = upoly_gcd(e, found[i]);
    return e.monic();
}

UPoly minimal_polynomial(const MPoly& h, const std::vector<MPoly>& gb) {
    std::vector<Mono> sm = standard_monomials(gb);
    if (sm.empty()) return UPoly(Rat(1));
    std::map<Mono, size_t> pos;
    for (size_t i = 0; i < sm.size(); ++i) pos[sm[i]] = i;
    const size_t D = sm.size();

    auto to_vec = [&](const MPoly& p) {
        std::vector<Rat> v(D, Rat(0));
        for (const auto& t : p.terms()) {
            auto it = pos.find(t.m);
            if (it == pos.end())
                throw SolveError("normal form escaped the staircase");
            v[it->second] = t.c;
        }
        return v;
    };

    // Incremental Gaussian elimination with augmented tracking: rows are
    // (reduced power vector | combination in terms of h^0..h^k).
    std::vector<std::vector<Rat>> rows;       // echelon rows over the first D cols
    std::vector<size_t> pivot_of_row;
    MPoly power = MPoly::constant(h.ring(), Rat(1));
    for (size_t k = 0; k <= D; ++k) {
        if (k > 0) power = normal_form(power * h, gb);
        std::vector<Rat> w = to_vec(power);
        std::vector<Rat> comb(D + 2, Rat(0));
        comb[k] = Rat(1);
        for (size_t r = 0; r < rows.size(); ++r) {
            size_t p = pivot_of_row[r];
            if (w[p] == 0) continue;
            Rat f = w[p];
            for (size_t c = 0; c < D; ++c) w[c] -= f * rows[r][c];
            for (size_t c = 0; c < D + 2; ++c) comb[c] -= f * rows[r][D + c];
        }
        size_t p = D;
        for (size_t c = 0; c < D; ++c)
            if (w[c] != 0) { p = c; break; }
        if (p == D) {
            // Dependency found: sum_k comb[k] * h^k == 0 in the quotient.
            std::vector<Rat> coeffs(comb.begin(), comb.begin() + (long)k + 1);
            return UPoly::from_coeffs(std::move(coeffs)).monic();
        }
        Rat inv = 1 / w[p];
        std::vector<Rat> row(2 * D + 2, Rat(0));
        for (size_t c = 0; c < D; ++c) row[c] = w[c] * inv;
        for (size_t c = 0; c < D + 2; ++c) row[D + c] = comb[c] * inv;
        rows.push_back(std::move(row));
        pivot_of_row.push_back(p);
    }
    throw SolveError("no minimal polynomial found below the dimension bound");
}

Shape shape_extract(const std::vector<MPoly>& gb, size_t main_var) {
    if (gb.empty() || is_unit_ideal(gb))
        throw ShapeError("empty or unit ideal has no shape decomposition");
    const RingPtr& ring = gb.front().ring();
    Shape s;
    s.main_var = main_var;
    std::vector<bool> seen(ring->arity(), false);
    for (const MPoly& g : gb) {
        if (g.univariate_in(main_var)) {
            if (!s.elim.is_zero()) throw ShapeError("multiple univariate elements");
            s.elim = g.to_upoly(main_var).monic();
            continue;
        }
        const Mono& m = g.lm();
        size_t v = kMaxVars;
        for (size_t i = 0; i < ring->arity(); ++i)
            if (m[i]) { v = i; break; }
        bool linear = v < kMaxVars && v != main_var && m[v] == 1;
        if (linear)
            for (size_t i = 0; i < kMaxVars; ++i)
                if (i != v && m[i] != 0) linear = false;
        if (!linear) throw ShapeError("leading term is not a bare variable: " + g.str());
        // Remaining terms must live in Q[main].
        MPoly rest = g - MPoly::var(ring, v);
        if (!rest.univariate_in(main_var))
            throw ShapeError("rewrite tail is not univariate: " + g.str());
        if (seen[v]) throw ShapeError("duplicate rewrite for " + ring->vars[v]);
        seen[v] = true;
        s.assign[v] = -rest.to_upoly(main_var);
    }
    if (s.elim.is_zero()) throw ShapeError("no univariate element");
    for (size_t v = 0; v < ring->arity(); ++v)
        if (v != main_var && !seen[v])
            throw ShapeError("variable " + ring->vars[v] + " is unconstrained");
    return s;
}

}  // namespace pq
