#ifndef BGLAB_UPOLY_HPP
#define BGLAB_UPOLY_HPP

#include <tuple>
#include <vector>

#include "bglab/rat.hpp"

namespace bglab {

// Univariate polynomial over an exact field K (Rat, NFElem, or any type
// providing +,-,*,/ plus is_zero / ring_zero / ring_one found by ADL).
// Canonical form: no trailing zero coefficients; coeffs[i] is the t^i term.
template <class K>
struct UPoly {
    std::vector<K> coeffs;

    UPoly() = default;
    explicit UPoly(std::vector<K> c) : coeffs(std::move(c)) { normalize(); }

    void normalize() {
        while (!coeffs.empty() && is_zero(coeffs.back())) coeffs.pop_back();
    }

    // deg(0) = -1 by convention.
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero_poly() const { return coeffs.empty(); }

    const K &leading() const {
        if (coeffs.empty()) throw err_zero_polynomial("leading coefficient of zero");
        return coeffs.back();
    }

    bool operator==(const UPoly &o) const { return coeffs == o.coeffs; }
    bool operator!=(const UPoly &o) const { return !(*this == o); }
};

template <class K>
UPoly<K> upoly_zero() { return UPoly<K>{}; }

template <class K>
UPoly<K> upoly_constant(const K &c) {
    UPoly<K> p;
    if (!is_zero(c)) p.coeffs.push_back(c);
    return p;
}

// The monic linear polynomial t - root.
template <class K>
UPoly<K> upoly_linear_root(const K &root) {
    UPoly<K> p;
    p.coeffs = {ring_zero(root) - root, ring_one(root)};
    p.normalize();
    return p;
}

template <class K>
bool upoly_is_monic(const UPoly<K> &f) {
    return !f.is_zero_poly() && is_one(f.leading());
}

template <class K>
UPoly<K> operator+(const UPoly<K> &a, const UPoly<K> &b) {
    UPoly<K> r;
    const size_t n = std::max(a.coeffs.size(), b.coeffs.size());
    r.coeffs.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        if (i < a.coeffs.size() && i < b.coeffs.size()) r.coeffs.push_back(a.coeffs[i] + b.coeffs[i]);
        else if (i < a.coeffs.size()) r.coeffs.push_back(a.coeffs[i]);
        else r.coeffs.push_back(b.coeffs[i]);
    }
    r.normalize();
    return r;
}

template <class K>
UPoly<K> operator-(const UPoly<K> &a) {
    UPoly<K> r = a;
    for (auto &c : r.coeffs) c = ring_zero(c) - c;
    return r;
}

template <class K>
UPoly<K> operator-(const UPoly<K> &a, const UPoly<K> &b) { return a + (-b); }

template <class K>
UPoly<K> operator*(const UPoly<K> &a, const UPoly<K> &b) {
    if (a.is_zero_poly() || b.is_zero_poly()) return UPoly<K>{};
    UPoly<K> r;
    K z = ring_zero(a.coeffs[0]);
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, z);
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] = r.coeffs[i + j] + a.coeffs[i] * b.coeffs[j];
    r.normalize();
    return r;
}

template <class K>
UPoly<K> operator*(const K &s, const UPoly<K> &a) {
    UPoly<K> r = a;
    for (auto &c : r.coeffs) c = s * c;
    r.normalize();
    return r;
}

template <class K>
UPoly<K> upoly_make_monic(const UPoly<K> &f) {
    if (f.is_zero_poly()) return f;
    K inv = ring_one(f.leading()) / f.leading();
    return inv * f;
}

// Euclidean division: f = q*g + r with deg r < deg g.
template <class K>
std::pair<UPoly<K>, UPoly<K>> upoly_divmod(const UPoly<K> &f, const UPoly<K> &g) {
    if (g.is_zero_poly()) throw err_div_by_zero("polynomial division by zero");
    UPoly<K> q, r = f;
    if (f.degree() < g.degree()) return {q, r};
    K z = ring_zero(g.leading());
    q.coeffs.assign(f.degree() - g.degree() + 1, z);
    while (!r.is_zero_poly() && r.degree() >= g.degree()) {
        K c = r.leading() / g.leading();
        int shift = r.degree() - g.degree();
        q.coeffs[shift] = q.coeffs[shift] + c;
        for (int i = 0; i <= g.degree(); ++i)
            r.coeffs[i + shift] = r.coeffs[i + shift] - c * g.coeffs[i];
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

template <class K>
UPoly<K> upoly_divexact(const UPoly<K> &f, const UPoly<K> &g) {
    auto [q, r] = upoly_divmod(f, g);
    if (!r.is_zero_poly()) throw err_internal("upoly_divexact: division not exact");
    return q;
}

template <class K>
UPoly<K> upoly_derivative(const UPoly<K> &f) {
    UPoly<K> r;
    for (int i = 1; i <= f.degree(); ++i)
        r.coeffs.push_back(ring_from_int(f.coeffs[i], i) * f.coeffs[i]);
    r.normalize();
    return r;
}

// Monic gcd; gcd with the zero polynomial is the other input made monic.
template <class K>
UPoly<K> poly_gcd(const UPoly<K> &f, const UPoly<K> &g) {
    UPoly<K> a = f, b = g;
    while (!b.is_zero_poly()) {
        auto [q, r] = upoly_divmod(a, b);
        (void)q;
        a = b;
        b = r;
    }
    return upoly_make_monic(a);
}

// Extended Euclid: returns (d, u, v) with u*f + v*g = d, d monic (or zero).
template <class K>
std::tuple<UPoly<K>, UPoly<K>, UPoly<K>> upoly_xgcd(const UPoly<K> &f, const UPoly<K> &g) {
    if (f.is_zero_poly() && g.is_zero_poly()) return {UPoly<K>{}, UPoly<K>{}, UPoly<K>{}};
    K one = ring_one(f.is_zero_poly() ? g.leading() : f.leading());
    UPoly<K> r0 = f, r1 = g;
    UPoly<K> s0 = upoly_constant(one), s1;
    UPoly<K> t0, t1 = upoly_constant(one);
    while (!r1.is_zero_poly()) {
        auto [q, r] = upoly_divmod(r0, r1);
        UPoly<K> s2 = s0 - q * s1;
        UPoly<K> t2 = t0 - q * t1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    K inv = one / r0.leading();
    return {inv * r0, inv * s0, inv * t0};
}

// f / gcd(f, f'): same roots as f, all simple.  Monic.
template <class K>
UPoly<K> squarefree_part(const UPoly<K> &f) {
    if (f.is_zero_poly()) throw err_zero_polynomial("squarefree_part of zero");
    UPoly<K> d = poly_gcd(f, upoly_derivative(f));
    return upoly_make_monic(upoly_divexact(f, d));
}

template <class K>
bool upoly_is_squarefree(const UPoly<K> &f) {
    if (f.is_zero_poly()) return false;
    return poly_gcd(f, upoly_derivative(f)).degree() == 0;
}

template <class K, class V>
V upoly_eval(const UPoly<K> &f, const V &x) {
    V acc = ring_zero(x);
    for (int i = f.degree(); i >= 0; --i) acc = acc * x + V(f.coeffs[i]);
    return acc;
}

// Resultant via the Sylvester matrix, evaluated by ordinary Gaussian
// elimination over the coefficient field.
template <class K>
K sylvester_resultant(const UPoly<K> &f, const UPoly<K> &g) {
    if (f.is_zero_poly() || g.is_zero_poly()) throw err_zero_polynomial("resultant with zero input");
    const int m = f.degree(), n = g.degree();
    K one = ring_one(f.leading());
    K zero = ring_zero(one);
    if (m == 0) return [&] { K acc = one; for (int i = 0; i < n; ++i) acc = acc * f.coeffs[0]; return acc; }();
    if (n == 0) return [&] { K acc = one; for (int i = 0; i < m; ++i) acc = acc * g.coeffs[0]; return acc; }();
    const int N = m + n;
    std::vector<std::vector<K>> a(N, std::vector<K>(N, zero));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) a[r][r + m - i] = f.coeffs[i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) a[n + r][r + n - i] = g.coeffs[i];
    K det = one;
    for (int col = 0; col < N; ++col) {
        int piv = -1;
        for (int r = col; r < N; ++r)
            if (!is_zero(a[r][col])) { piv = r; break; }
        if (piv < 0) return zero;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = zero - det;
        }
        det = det * a[col][col];
        K inv = one / a[col][col];
        for (int r = col + 1; r < N; ++r) {
            if (is_zero(a[r][col])) continue;
            K factor = a[r][col] * inv;
            for (int c = col; c < N; ++c) a[r][c] = a[r][c] - factor * a[col][c];
        }
    }
    return det;
}

// disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f)
template <class K>
K upoly_discriminant(const UPoly<K> &f) {
    if (f.degree() < 1) throw err_zero_polynomial("discriminant needs degree >= 1");
    UPoly<K> fp = upoly_derivative(f);
    K one = ring_one(f.leading());
    if (fp.is_zero_poly()) return ring_zero(one);
    K res = sylvester_resultant(f, fp);
    K d = res / f.leading();
    int dd = f.degree();
    if (((dd * (dd - 1)) / 2) % 2 == 1) d = ring_zero(one) - d;
    return d;
}

} // namespace bglab

#endif
