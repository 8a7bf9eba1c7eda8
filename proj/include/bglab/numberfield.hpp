#ifndef BGLAB_NUMBERFIELD_HPP
#define BGLAB_NUMBERFIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "bglab/upoly.hpp"

namespace bglab {

// One ambient field K = Q[t]/(h) per experiment.  nf_new verifies that h is
// monic and squarefree and, for degree >= 2, has no rational roots; that
// already decides irreducibility up to degree 3.  Beyond that the caller's
// claim is recorded, not checked (full factorization over Q is out of scope).
struct NumberFieldData {
    UPoly<Rat> minpoly;
    int degree = 0;
    bool irreducibility_verified = false;
};

class NumberField {
  public:
    NumberField() = default;
    explicit NumberField(std::shared_ptr<const NumberFieldData> d) : d_(std::move(d)) {}

    bool valid() const { return static_cast<bool>(d_); }
    const UPoly<Rat> &minpoly() const { return d_->minpoly; }
    int degree() const { return d_->degree; }
    bool irreducibility_verified() const { return d_->irreducibility_verified; }

    bool same_as(const NumberField &o) const {
        if (d_ == o.d_) return true;
        if (!d_ || !o.d_) return false;
        return d_->minpoly == o.d_->minpoly;
    }

  private:
    std::shared_ptr<const NumberFieldData> d_;
};

// All rational roots of a polynomial with rational coefficients, found by the
// rational-root theorem after clearing denominators.
inline std::vector<Rat> rational_roots(const UPoly<Rat> &f) {
    std::vector<Rat> out;
    if (f.is_zero_poly()) return out;
    Int den_lcm = 1;
    for (const Rat &c : f.coeffs) {
        Int d = c.get_den();
        den_lcm = den_lcm / gcd(den_lcm, d) * d;
    }
    std::vector<Int> ic;
    for (const Rat &c : f.coeffs) {
        Rat scaled = c * Rat(den_lcm);
        ic.push_back(scaled.get_num());
    }
    // Strip powers of t so the constant term is nonzero.
    size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low == ic.size()) return out; // zero polynomial, filtered above
    if (low > 0) out.push_back(Rat(0));
    Int a0 = ic[low], an = ic.back();
    for (const Int &p : positive_divisors(a0)) {
        for (const Int &q : positive_divisors(an)) {
            Rat cand(p, q);
            cand.canonicalize();
            for (int sign = 0; sign < 2; ++sign) {
                Rat c = sign ? -cand : cand;
                if (is_zero(upoly_eval(f, c))) {
                    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline NumberField nf_new(const UPoly<Rat> &minpoly) {
    if (minpoly.degree() < 1) throw err_not_a_field("minimal polynomial must have degree >= 1");
    if (!upoly_is_monic(minpoly)) throw err_not_a_field("minimal polynomial must be monic");
    if (!upoly_is_squarefree(minpoly)) throw err_not_a_field("minimal polynomial must be squarefree");
    bool verified = true;
    if (minpoly.degree() >= 2) {
        if (!rational_roots(minpoly).empty())
            throw err_not_a_field("minimal polynomial has a rational root");
        // Degree 2 or 3 with no rational root is irreducible; higher degrees
        // are taken on the caller's word.
        verified = minpoly.degree() <= 3;
    }
    auto data = std::make_shared<NumberFieldData>();
    data->minpoly = minpoly;
    data->degree = minpoly.degree();
    data->irreducibility_verified = verified;
    return NumberField(data);
}

inline NumberField nf_rationals() {
    return nf_new(UPoly<Rat>({Rat(-1), Rat(1)})); // t - 1
}

// Element of K in the power basis: coeffs[i] multiplies theta^i, always of
// length deg(K).  Representation is unique, so equality is coefficient-wise.
class NFElem {
  public:
    NFElem() = default;
    NFElem(NumberField field, std::vector<Rat> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) != field_.degree())
            throw err_field_mismatch("coefficient vector length != field degree");
    }

    static NFElem zero(const NumberField &f) { return NFElem(f, std::vector<Rat>(f.degree(), Rat(0))); }
    static NFElem one(const NumberField &f) { return from_rat(f, Rat(1)); }
    static NFElem from_rat(const NumberField &f, const Rat &r) {
        std::vector<Rat> c(f.degree(), Rat(0));
        c[0] = r;
        return NFElem(f, std::move(c));
    }
    static NFElem gen(const NumberField &f) {
        // theta, the class of t; for degree 1 this is the rational root of h.
        if (f.degree() == 1) return from_rat(f, -f.minpoly().coeffs[0]);
        std::vector<Rat> c(f.degree(), Rat(0));
        c[1] = 1;
        return NFElem(f, std::move(c));
    }

    const NumberField &field() const { return field_; }
    const std::vector<Rat> &coeffs() const { return c_; }

    bool is_zero_elem() const {
        for (const Rat &x : c_) if (!bglab::is_zero(x)) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i) if (!bglab::is_zero(c_[i])) return false;
        return true;
    }
    // Only valid when is_rational().
    const Rat &rat_value() const { return c_[0]; }

    bool operator==(const NFElem &o) const { return field_.same_as(o.field_) && c_ == o.c_; }
    bool operator!=(const NFElem &o) const { return !(*this == o); }

    friend NFElem operator+(const NFElem &a, const NFElem &b) {
        a.check_same(b);
        std::vector<Rat> c(a.c_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
        return NFElem(a.field_, std::move(c));
    }
    friend NFElem operator-(const NFElem &a, const NFElem &b) {
        a.check_same(b);
        std::vector<Rat> c(a.c_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] - b.c_[i];
        return NFElem(a.field_, std::move(c));
    }
    friend NFElem operator-(const NFElem &a) { return zero(a.field_) - a; }
    friend NFElem operator*(const NFElem &a, const NFElem &b) {
        a.check_same(b);
        const int d = a.field_.degree();
        std::vector<Rat> prod(2 * d - 1, Rat(0));
        for (int i = 0; i < d; ++i) {
            if (bglab::is_zero(a.c_[i])) continue;
            for (int j = 0; j < d; ++j) prod[i + j] += a.c_[i] * b.c_[j];
        }
        reduce(a.field_, prod);
        prod.resize(d, Rat(0));
        return NFElem(a.field_, std::move(prod));
    }
    friend NFElem operator/(const NFElem &a, const NFElem &b) { return a * b.inverse(); }

    NFElem inverse() const {
        if (is_zero_elem()) throw err_div_by_zero("inverse of zero field element");
        UPoly<Rat> self(c_);
        auto [d, u, v] = upoly_xgcd(self, field_.minpoly());
        (void)v;
        if (d.degree() != 0)
            throw err_not_a_field("element not invertible: modulus is reducible");
        // d is the constant 1 after normalization, so u * self = 1 mod h.
        std::vector<Rat> c = u.coeffs;
        reduce(field_, c);
        c.resize(field_.degree(), Rat(0));
        return NFElem(field_, std::move(c));
    }

    NFElem pow(long e) const {
        if (e == 0) return one(field_);
        NFElem b = e < 0 ? inverse() : *this;
        unsigned long k = e < 0 ? 0UL - static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
        NFElem acc = one(field_);
        while (k) {
            if (k & 1) acc = acc * b;
            b = b * b;
            k >>= 1;
        }
        return acc;
    }

  private:
    void check_same(const NFElem &o) const {
        if (!field_.same_as(o.field_)) throw err_field_mismatch();
    }
    // In-place reduction of a coefficient vector modulo the (monic) minpoly.
    static void reduce(const NumberField &f, std::vector<Rat> &c) {
        const int d = f.degree();
        const auto &h = f.minpoly().coeffs;
        for (int i = static_cast<int>(c.size()) - 1; i >= d; --i) {
            if (bglab::is_zero(c[i])) continue;
            Rat lead = c[i];
            c[i] = 0;
            for (int j = 0; j < d; ++j) c[i - d + j] -= lead * h[j];
        }
    }

    NumberField field_;
    std::vector<Rat> c_;
};

inline bool is_zero(const NFElem &x) { return x.is_zero_elem(); }
inline bool is_one(const NFElem &x) { return x == NFElem::one(x.field()); }
inline NFElem ring_zero(const NFElem &like) { return NFElem::zero(like.field()); }
inline NFElem ring_one(const NFElem &like) { return NFElem::one(like.field()); }
inline NFElem ring_from_int(const NFElem &like, long n) { return NFElem::from_rat(like.field(), Rat(n)); }

enum class NFOp { add, sub, mul, div };

inline NFElem nf_arith(const NFElem &a, const NFElem &b, NFOp op) {
    switch (op) {
        case NFOp::add: return a + b;
        case NFOp::sub: return a - b;
        case NFOp::mul: return a * b;
        case NFOp::div: return a / b;
    }
    throw err_internal("unreachable");
}

// Field norm N_{K/Q}(x): determinant of multiplication-by-x on the power
// basis.  Drives the valuation columns of the relation-lattice proposals.
inline Rat nf_norm(const NFElem &x) {
    const int d = x.field().degree();
    if (d == 1) return x.coeffs()[0];
    // Columns: coefficients of x * theta^j.
    std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d, Rat(0)));
    NFElem cur = x;
    NFElem theta = NFElem::gen(x.field());
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) m[i][j] = cur.coeffs()[i];
        if (j + 1 < d) cur = cur * theta;
    }
    // Fraction-free Bareiss determinant over Q.
    Rat det(1);
    Rat prev(1);
    int sign = 1;
    for (int k = 0; k < d - 1; ++k) {
        if (bglab::is_zero(m[k][k])) {
            int piv = -1;
            for (int r = k + 1; r < d; ++r)
                if (!bglab::is_zero(m[r][k])) { piv = r; break; }
            if (piv < 0) return Rat(0);
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < d; ++i)
            for (int j = k + 1; j < d; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    det = m[d - 1][d - 1];
    return sign > 0 ? det : -det;
}

inline std::string nf_elem_to_string(const NFElem &x) {
    std::string s = "[";
    for (size_t i = 0; i < x.coeffs().size(); ++i) {
        if (i) s += ",";
        s += rat_to_string(x.coeffs()[i]);
    }
    return s + "]";
}

} // namespace bglab

#endif
