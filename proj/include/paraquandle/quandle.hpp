// paraquandle — the parabolic quandle on C^2 and its meridian matrices.
// SPDX-License-Identifier: MIT
#pragma once

namespace pq {

/// Column vector (x, y) over any commutative coefficient type: exact
/// rationals, multivariate polynomials, or bigfloat complex numbers.
template <typename T>
struct QVec {
    T x{}, y{};

    friend bool operator==(const QVec& a, const QVec& b) {
        return a.x == b.x && a.y == b.y;
    }
};

/// The symplectic form <a, b> = det(a | b).
template <typename T>
T form(const QVec<T>& a, const QVec<T>& b) {
    return a.x * b.y - a.y * b.x;
}

/// Quandle operation: eps = +1 gives a > b = a + <a,b> b, eps = -1 the
/// inverse operation a + <b,a> b.
template <typename T>
QVec<T> qop(const QVec<T>& a, const QVec<T>& b, int eps) {
    T f = form(a, b);
    if (eps < 0) f = -f;
    return {a.x + f * b.x, a.y + f * b.y};
}

template <typename T>
QVec<T> qneg(const QVec<T>& a) {
    return {-a.x, -a.y};
}

template <typename T>
QVec<T> qscale(const QVec<T>& a, const T& s) {
    return {a.x * s, a.y * s};
}

/// 2x2 matrix [[a, b], [c, d]].
template <typename T>
struct Mat2 {
    T a{}, b{}, c{}, d{};

    static Mat2 identity(const T& one) { return {one, one - one, one - one, one}; }
    T trace() const { return a + d; }
    T det() const { return a * d - b * c; }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    QVec<T> operator*(const QVec<T>& v) const {
        return {a * v.x + b * v.y, c * v.x + d * v.y};
    }
    friend bool operator==(const Mat2& m, const Mat2& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }
};

/// Parabolic meridian image of the vector v = (x, y):
///   M(v) = [[1 - xy, x^2], [-y^2, 1 + xy]],
/// a unipotent matrix (trace 2, determinant 1) fixing v. Its action on
/// quandle vectors realizes the inverse operation: M(b) a = qop(a, b, -1).
/// `one` is the multiplicative identity of T (types like polynomials cannot
/// synthesize constants without their ring context).
template <typename T>
Mat2<T> meridian_matrix(const QVec<T>& v, const T& one) {
    return {one - v.x * v.y, v.x * v.x, one - one - v.y * v.y, one + v.x * v.y};
}

/// Inverse of the meridian matrix: M(v)^{-1} = [[1 + xy, -x^2], [y^2, 1 - xy]].
template <typename T>
Mat2<T> meridian_matrix_inv(const QVec<T>& v, const T& one) {
    return {one + v.x * v.y, one - one - v.x * v.x, v.y * v.y, one - v.x * v.y};
}

}  // namespace pq
