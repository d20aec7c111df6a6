// paraquandle — sparse multivariate polynomial arithmetic.
// SPDX-License-Identifier: MIT

#include "paraquandle/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pq {

size_t Ring::index(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return i;
    throw std::out_of_range("unknown variable: " + name);
}

RingPtr Ring::make(std::vector<std::string> names) {
    if (names.size() > kMaxVars)
        throw std::length_error("ring arity exceeds limit");
    auto r = std::make_shared<Ring>();
    r->vars = std::move(names);
    return r;
}

int mono_cmp(const Mono& a, const Mono& b) {
    for (size_t i = 0; i < kMaxVars; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r{};
    for (size_t i = 0; i < kMaxVars; ++i) {
        unsigned s = unsigned(a[i]) + unsigned(b[i]);
        if (s > 0xffffu) throw std::overflow_error("monomial exponent overflow");
        r[i] = uint16_t(s);
    }
    return r;
}

bool mono_divides(const Mono& a, const Mono& b) {
    for (size_t i = 0; i < kMaxVars; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Mono mono_div(const Mono& a, const Mono& b) {
    Mono r{};
    for (size_t i = 0; i < kMaxVars; ++i) r[i] = uint16_t(a[i] - b[i]);
    return r;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono r{};
    for (size_t i = 0; i < kMaxVars; ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

int mono_total_degree(const Mono& m) {
    int d = 0;
    for (size_t i = 0; i < kMaxVars; ++i) d += m[i];
    return d;
}

namespace {

struct MonoGreater {
    bool operator()(const Mono& a, const Mono& b) const { return mono_cmp(a, b) > 0; }
};

std::vector<Term> collect(std::map<Mono, Rat, MonoGreater>&& acc) {
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) out.push_back({m, std::move(c)});
    return out;
}

}  // namespace

MPoly MPoly::constant(RingPtr ring, const Rat& c) {
    MPoly p(std::move(ring));
    if (c != 0) p.terms_.push_back({mono_one(), c});
    return p;
}

MPoly MPoly::var(RingPtr ring, size_t idx, int exp) {
    if (idx >= ring->arity()) throw std::out_of_range("variable index out of range");
    if (exp < 0) throw std::domain_error("negative exponent");
    MPoly p(std::move(ring));
    if (exp >= 0) {
        Mono m{};
        m[idx] = uint16_t(exp);
        p.terms_.push_back({m, Rat(1)});
    }
    return p;
}

MPoly MPoly::var(RingPtr ring, const std::string& name, int exp) {
    size_t idx = ring->index(name);
    return var(std::move(ring), idx, exp);
}

MPoly MPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
    std::map<Mono, Rat, MonoGreater> acc;
    for (auto& t : terms) acc[t.m] += t.c;
    MPoly p(std::move(ring));
    p.terms_ = collect(std::move(acc));
    return p;
}

MPoly MPoly::from_upoly(RingPtr ring, const UPoly& p, size_t var_idx) {
    std::vector<Term> ts;
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i) == 0) continue;
        Mono m{};
        m[var_idx] = uint16_t(i);
        ts.push_back({m, p.coeff(i)});
    }
    return from_terms(std::move(ring), std::move(ts));
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m == mono_one());
}

const Term& MPoly::lt() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.front();
}

int MPoly::degree_in(size_t var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, int(t.m[var]));
    return d;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, mono_total_degree(t.m));
    return d;
}

bool MPoly::univariate_in(size_t var) const {
    for (const auto& t : terms_)
        for (size_t i = 0; i < kMaxVars; ++i)
            if (i != var && t.m[i] != 0) return false;
    return true;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    // Merge two descending-sorted term lists.
    MPoly r(ring_ ? ring_ : o.ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = mono_cmp(terms_[i].m, o.terms_[j].m);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Rat s = terms_[i].c + o.terms_[j].c;
            if (s != 0) r.terms_.push_back({terms_[i].m, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
    std::map<Mono, Rat, MonoGreater> acc;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) acc[mono_mul(a.m, b.m)] += a.c * b.c;
    MPoly r(ring_ ? ring_ : o.ring_);
    r.terms_ = collect(std::move(acc));
    return r;
}

MPoly MPoly::operator*(const Rat& s) const {
    if (s == 0) return MPoly(ring_);
    MPoly r = *this;
    for (auto& t : r.terms_) t.c *= s;
    return r;
}

bool MPoly::operator==(const MPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

MPoly MPoly::pow(int e) const {
    if (e < 0) throw std::domain_error("negative exponent");
    MPoly r = constant(ring_, Rat(1));
    MPoly base = *this;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

MPoly MPoly::subst(size_t var, const MPoly& value) const {
    MPoly out(ring_);
    // Group by exponent of `var` and use Horner on the grouped pieces.
    int dmax = degree_in(var);
    if (dmax < 1) return *this;  // the variable does not occur
    std::vector<MPoly> bucket(size_t(dmax) + 1, MPoly(ring_));
    for (const auto& t : terms_) {
        Mono m = t.m;
        int e = m[var];
        m[var] = 0;
        bucket[e] += from_terms(ring_, {{m, t.c}});
    }
    for (int e = dmax; e >= 0; --e) out = out * value + bucket[e];
    return out;
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
    if (point.size() != ring_->arity())
        throw std::invalid_argument("evaluation point arity mismatch");
    Rat acc(0);
    for (const auto& t : terms_) {
        Rat v = t.c;
        for (size_t i = 0; i < ring_->arity(); ++i)
            if (t.m[i]) v *= pow_rat(point[i], t.m[i]);
        acc += v;
    }
    return acc;
}

UPoly MPoly::to_upoly(size_t var) const {
    if (!univariate_in(var))
        throw std::domain_error("polynomial is not univariate in " + ring_->vars[var]);
    std::vector<Rat> c(size_t(std::max(degree_in(var), 0)) + 1, Rat(0));
    for (const auto& t : terms_) c[t.m[var]] = t.c;
    return UPoly::from_coeffs(std::move(c));
}

MPoly MPoly::primitive() const {
    if (terms_.empty()) return *this;
    Int num_gcd(0), den_lcm(1);
    for (const auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
    }
    Rat content = rat(num_gcd, den_lcm);
    if (lc() < 0) content = -content;
    return *this * (1 / content);
}

MPoly MPoly::monic() const {
    if (terms_.empty()) return *this;
    return *this * (1 / lc());
}

int MPoly::cmp(const MPoly& o) const {
    size_t n = std::min(terms_.size(), o.terms_.size());
    for (size_t i = 0; i < n; ++i) {
        int c = mono_cmp(terms_[i].m, o.terms_[i].m);
        if (c != 0) return c;
        c = ::cmp(terms_[i].c, o.terms_[i].c);
        if (c != 0) return c;
    }
    if (terms_.size() != o.terms_.size())
        return terms_.size() < o.terms_.size() ? -1 : 1;
    return 0;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (first) {
            if (t.c < 0) os << "-";
        } else {
            os << (t.c < 0 ? " - " : " + ");
        }
        Rat a = abs(t.c);
        bool has_vars = t.m != mono_one();
        if (a != 1 || !has_vars) os << a.get_str();
        bool printed = (a != 1 || !has_vars);
        for (size_t i = 0; i < ring_->arity(); ++i) {
            if (!t.m[i]) continue;
            if (printed) os << "*";
            os << ring_->vars[i];
            if (t.m[i] > 1) os << "^" << t.m[i];
            printed = true;
        }
        first = false;
    }
    return os.str();
}

MPoly transport(const MPoly& p, const RingPtr& target) {
    std::vector<size_t> map(p.ring()->arity());
    std::vector<bool> used(p.ring()->arity(), false);
    for (const auto& t : p.terms())
        for (size_t i = 0; i < p.ring()->arity(); ++i)
            if (t.m[i]) used[i] = true;
    for (size_t i = 0; i < p.ring()->arity(); ++i)
        if (used[i]) map[i] = target->index(p.ring()->vars[i]);
    std::vector<Term> ts;
    ts.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        Mono m{};
        for (size_t i = 0; i < p.ring()->arity(); ++i)
            if (t.m[i]) m[map[i]] = t.m[i];
        ts.push_back({m, t.c});
    }
    return MPoly::from_terms(target, std::move(ts));
}

}  // namespace pq
