#ifndef BGLAB_RAT_HPP
#define BGLAB_RAT_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "bglab/errors.hpp"

namespace bglab {

// Exact rationals are GMP's canonicalized mpq: gcd(|num|, den) = 1, den >= 1.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw err_div_by_zero("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_from_string(const std::string &s) {
    std::string t = s;
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    try {
        Rat r;
        if (r.set_str(t, 10) != 0) throw err_parse("bad rational: \"" + s + "\"");
        if (r.get_den() == 0) throw err_parse("zero denominator: \"" + s + "\"");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument &) {
        throw err_parse("bad rational: \"" + s + "\"");
    }
}

inline std::string rat_to_string(const Rat &r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline bool is_zero(const Rat &r) { return sgn(r) == 0; }
inline bool is_one(const Rat &r) { return r == 1; }

inline Rat ring_zero(const Rat &) { return Rat(0); }
inline Rat ring_one(const Rat &) { return Rat(1); }
inline Rat ring_from_int(const Rat &, long n) { return Rat(n); }

inline Rat rat_pow(const Rat &base, long e) {
    if (e == 0) return Rat(1);
    if (is_zero(base)) {
        if (e < 0) throw err_div_by_zero("0 to a negative power");
        return Rat(0);
    }
    Rat b = e < 0 ? Rat(1) / base : base;
    unsigned long k = e < 0 ? 0UL - static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    Rat acc(1);
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

// Nearest integer, ties toward +infinity.  Used when scaling log vectors
// ahead of lattice reduction.
inline Int rat_round(const Rat &r) {
    Int q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    if (Rat(rem * 2) >= Rat(r.get_den())) q += 1;
    return q;
}

inline Int int_pow(const Int &b, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
    return out;
}

inline Int factorial(unsigned long n) {
    Int out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

// Round to denominator 2^bits (toward nearest).  Keeps iterative numeric
// refinements inside the dyadic rationals so interval endpoints stay small.
inline Rat dyadic_round(const Rat &r, unsigned bits) {
    Int scale = int_pow(2, bits);
    Rat scaled = r * Rat(scale);
    return Rat(rat_round(scaled)) / Rat(scale);
}

inline std::vector<Int> positive_divisors(const Int &n) {
    Int m = abs(n);
    std::vector<Int> out;
    if (m == 0) return out;
    for (Int d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            if (d * d != m) out.push_back(m / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace bglab

#endif
