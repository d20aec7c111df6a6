// paraquandle — dense univariate polynomial arithmetic over Q.
// SPDX-License-Identifier: MIT

#include "paraquandle/upoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pq {

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::from_coeffs(std::vector<Rat> coeffs) {
    UPoly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

UPoly UPoly::monomial(const Rat& coeff, int k) {
    UPoly p;
    if (coeff != 0) {
        p.c_.assign(k + 1, Rat(0));
        p.c_[k] = coeff;
    }
    return p;
}

const Rat& UPoly::lc() const {
    if (c_.empty()) throw std::domain_error("lc of zero polynomial");
    return c_.back();
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
    UPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    UPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            if (o.c_[j] != 0) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

UPoly UPoly::operator*(const Rat& s) const {
    if (s == 0) return UPoly();
    UPoly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

Rat UPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UPoly UPoly::compose(const UPoly& inner) const {
    UPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + UPoly(*it);
    return acc;
}

UPoly UPoly::derivative() const {
    UPoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Rat((long)i);
    r.trim();
    return r;
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (1 / lc());
}

UPoly UPoly::neg_x() const {
    UPoly r = *this;
    for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

UPoly::DivRem UPoly::divrem(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    DivRem out;
    out.r = *this;
    if (degree() < d.degree()) return out;
    out.q.c_.assign(degree() - d.degree() + 1, Rat(0));
    Rat inv_lc = 1 / d.lc();
    while (!out.r.is_zero() && out.r.degree() >= d.degree()) {
        int k = out.r.degree() - d.degree();
        Rat f = out.r.lc() * inv_lc;
        out.q.c_[k] = f;
        // r -= f * x^k * d, with the leading term cancelled exactly.
        for (int i = 0; i <= d.degree(); ++i) out.r.c_[k + i] -= f * d.c_[i];
        out.r.trim();
    }
    out.q.trim();
    return out;
}

UPoly UPoly::div_exact(const UPoly& d) const {
    DivRem dr = divrem(d);
    if (!dr.r.is_zero()) throw std::domain_error("inexact polynomial division");
    return dr.q;
}

UPoly::Primitive UPoly::primitive() const {
    if (is_zero()) return {Rat(0), UPoly()};
    Int num_gcd(0), den_lcm(1);
    for (const auto& c : c_) {
        if (c == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat content = rat(num_gcd, den_lcm);
    if (lc() < 0) content = -content;
    UPoly prim = *this * (1 / content);
    return {content, prim};
}

int UPoly::cmp(const UPoly& o) const {
    if (degree() != o.degree()) return degree() < o.degree() ? -1 : 1;
    for (size_t i = 0; i < c_.size(); ++i) {
        int s = ::cmp(c_[i], o.c_[i]);
        if (s != 0) return s;
    }
    return 0;
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat c = coeff(i);
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rat a = abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

namespace {

// Integer-coefficient view used by the primitive PRS; coefficients in Z.
using ZPoly = std::vector<Int>;

ZPoly to_zpoly(const UPoly& p) {
    UPoly::Primitive pr = p.primitive();
    ZPoly z(pr.prim.degree() + 1);
    for (int i = 0; i <= pr.prim.degree(); ++i) z[i] = pr.prim.coeff(i).get_num();
    return z;
}

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Int zcontent(const ZPoly& p) {
    Int g(0);
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

void zdivide_scalar(ZPoly& p, const Int& s) {
    for (auto& c : p) c /= s;
}

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
ZPoly zprem(ZPoly a, const ZPoly& b) {
    int db = static_cast<int>(b.size()) - 1;
    const Int& lb = b.back();
    while (static_cast<int>(a.size()) - 1 >= db) {
        int k = static_cast<int>(a.size()) - 1 - db;
        Int la = a.back();
        for (auto& c : a) c *= lb;
        for (int i = 0; i <= db; ++i) a[k + i] -= la * b[i];
        ztrim(a);
        if (a.empty()) break;
    }
    return a;
}

}  // namespace

UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    ZPoly u = to_zpoly(a), v = to_zpoly(b);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        ZPoly r = zprem(u, v);
        if (!r.empty()) {
            Int c = zcontent(r);
            zdivide_scalar(r, c);
        }
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<Rat> coeffs(u.size());
    for (size_t i = 0; i < u.size(); ++i) coeffs[i] = Rat(u[i]);
    return UPoly::from_coeffs(std::move(coeffs)).monic();
}

UPolyXgcd upoly_xgcd(const UPoly& a, const UPoly& b) {
    // Plain rational-arithmetic Euclid; these calls stay at modest degree.
    UPoly r0 = a, r1 = b;
    UPoly s0(Rat(1)), s1, t0, t1(Rat(1));
    while (!r1.is_zero()) {
        UPoly::DivRem dr = r0.divrem(r1);
        UPoly r2 = dr.r;
        UPoly s2 = s0 - dr.q * s1;
        UPoly t2 = t0 - dr.q * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) return {UPoly(), UPoly(), UPoly()};
    Rat inv = 1 / r0.lc();
    return {r0 * inv, s0 * inv, t0 * inv};
}

UPoly upoly_inverse_mod(const UPoly& a, const UPoly& m) {
    UPolyXgcd e = upoly_xgcd(a, m);
    if (e.g.degree() != 0)
        throw std::domain_error("polynomial not invertible modulo " + m.str());
    return e.s.divrem(m).r;
}

UPoly upoly_mod(const UPoly& a, const UPoly& m) { return a.divrem(m).r; }

UPoly upoly_mulmod(const UPoly& a, const UPoly& b, const UPoly& m) {
    return (a * b).divrem(m).r;
}

UPoly squarefree_part(const UPoly& p) {
    if (p.degree() <= 0) return p.is_zero() ? p : UPoly(Rat(1));
    UPoly g = upoly_gcd(p, p.derivative());
    return p.div_exact(g).monic();
}

std::vector<UPoly> squarefree_decomposition(const UPoly& p) {
    std::vector<UPoly> out;
    if (p.degree() <= 0) return out;
    UPoly f = p.monic();
    UPoly g = upoly_gcd(f, f.derivative());
    UPoly b = f.div_exact(g);
    UPoly c = f.derivative().div_exact(g);
    UPoly d = c - b.derivative();
    while (b.degree() > 0) {
        UPoly ai = upoly_gcd(b, d).monic();
        out.push_back(ai);
        b = b.div_exact(ai);
        c = d.div_exact(ai);
        d = c - b.derivative();
    }
    return out;
}

}  // namespace pq
