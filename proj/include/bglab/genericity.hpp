#ifndef BGLAB_GENERICITY_HPP
#define BGLAB_GENERICITY_HPP

#include <set>

#include "bglab/nfmatrix.hpp"

namespace bglab {

enum class GenericityVerdict { weyl_contained_confirmed, unknown };

inline const char *genericity_verdict_name(GenericityVerdict v) {
    return v == GenericityVerdict::weyl_contained_confirmed ? "weyl-contained-confirmed" : "unknown";
}

// Type-A genericity evidence: factorization cycle types of the characteristic
// polynomial modulo good primes (Dedekind), confirmed when the observed types
// cannot generate anything smaller than S_n.
struct GenericityReport {
    UPoly<Rat> charpoly;
    std::vector<long> primes_used;
    std::vector<std::vector<int>> cycle_types; // partitions of n, sorted descending
    GenericityVerdict verdict = GenericityVerdict::unknown;
};

namespace detail {

// Dense univariate arithmetic over F_p for small p.  Coefficients in [0, p),
// index = degree, no trailing zeros.
using FpPoly = std::vector<long>;

inline void fp_trim(FpPoly &f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline long fp_inv(long x, long p) {
    long r = 1, e = p - 2, base = ((x % p) + p) % p;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

// a mod b, b nonzero.
inline FpPoly fp_rem(FpPoly a, const FpPoly &b, long p) {
    fp_trim(a);
    const long li = fp_inv(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        long c = a.back() * li % p;
        size_t shift = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j)
            a[shift + j] = ((a[shift + j] - c * b[j]) % p + p) % p;
        fp_trim(a);
    }
    return a;
}

// Exact quotient a / b (remainder known to be zero).
inline FpPoly fp_quotient(FpPoly a, const FpPoly &b, long p) {
    fp_trim(a);
    if (a.size() < b.size()) return {};
    FpPoly q(a.size() - b.size() + 1, 0);
    const long li = fp_inv(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        long c = a.back() * li % p;
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t j = 0; j < b.size(); ++j)
            a[shift + j] = ((a[shift + j] - c * b[j]) % p + p) % p;
        fp_trim(a);
    }
    return q;
}

inline FpPoly fp_mulmod(const FpPoly &a, const FpPoly &b, const FpPoly &mod, long p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return fp_rem(std::move(r), mod, p);
}

inline FpPoly fp_powmod(FpPoly base, unsigned long e, const FpPoly &mod, long p) {
    FpPoly acc{1};
    base = fp_rem(std::move(base), mod, p);
    while (e) {
        if (e & 1) acc = fp_mulmod(acc, base, mod, p);
        base = fp_mulmod(base, base, mod, p);
        e >>= 1;
    }
    return acc;
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, long p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        long li = fp_inv(a.back(), p);
        for (auto &c : a) c = c * li % p;
    }
    return a;
}

// Irreducible factor degrees of a squarefree monic f mod p, via
// distinct-degree factorization; this is the Frobenius cycle type.
inline std::vector<int> fp_cycle_type(FpPoly f, long p) {
    std::vector<int> type;
    FpPoly h{0, 1}; // x^(p^d) mod f, advanced one Frobenius step per round
    int d = 0;
    while (static_cast<int>(f.size()) - 1 > 0) {
        ++d;
        if (2 * d > static_cast<int>(f.size()) - 1) {
            type.push_back(static_cast<int>(f.size()) - 1);
            break;
        }
        h = fp_powmod(std::move(h), static_cast<unsigned long>(p), f, p);
        FpPoly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = ((diff[1] - 1) % p + p) % p; // h - x
        fp_trim(diff);
        FpPoly g = fp_gcd(f, diff, p);
        if (g.size() > 1) {
            int count = (static_cast<int>(g.size()) - 1) / d;
            for (int i = 0; i < count; ++i) type.push_back(d);
            f = fp_quotient(std::move(f), g, p);
            h = fp_rem(std::move(h), f, p);
        }
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

using Perm = std::vector<int>;

inline Perm perm_compose(const Perm &a, const Perm &b) {
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

inline size_t subgroup_order(const std::vector<Perm> &gens, size_t cap) {
    if (gens.empty()) return 0;
    Perm id(gens[0].size());
    for (size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    std::set<Perm> seen{id};
    std::vector<Perm> frontier{id};
    while (!frontier.empty() && seen.size() <= cap) {
        std::vector<Perm> next;
        for (const auto &f : frontier)
            for (const auto &g : gens) {
                Perm c = perm_compose(f, g);
                if (seen.insert(c).second) next.push_back(c);
            }
        frontier = std::move(next);
    }
    return seen.size();
}

inline std::vector<int> cycle_type_of(const Perm &p) {
    std::vector<int> lens;
    std::vector<bool> seen(p.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<size_t>(p[j]);
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return lens;
}

inline std::vector<Perm> perms_of_cycle_type(const std::vector<int> &type, int n) {
    std::vector<Perm> out;
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    do {
        if (cycle_type_of(p) == type) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline long factorial_l(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Sound confirmation: the Galois group holds one (unknown) element of each
// observed conjugacy class, so if EVERY choice of representatives already
// generates S_n, the group is S_n.  Conjugation-invariance pins the first
// class to a single representative.
inline bool types_force_symmetric_group(const std::vector<std::vector<int>> &types, int n) {
    std::vector<std::vector<int>> distinct;
    for (const auto &t : types)
        if (!t.empty() && std::find(distinct.begin(), distinct.end(), t) == distinct.end())
            distinct.push_back(t);
    if (distinct.empty()) return false;
    if (n > 5) {
        // Beyond the desk-scale closure computation: classical sufficient
        // condition (n-cycle and a transposition pattern, n prime).
        bool ncycle = false, transposition = false;
        for (const auto &t : distinct) {
            if (t.size() == 1 && t[0] == n) ncycle = true;
            std::vector<int> tp(static_cast<size_t>(n) - 1, 1);
            tp[0] = 2;
            if (t == tp) transposition = true;
        }
        bool prime = n >= 2;
        for (int d = 2; d * d <= n; ++d)
            if (n % d == 0) prime = false;
        return ncycle && transposition && prime;
    }

    std::vector<std::vector<Perm>> classes;
    for (const auto &t : distinct) classes.push_back(perms_of_cycle_type(t, n));
    const size_t full = static_cast<size_t>(factorial_l(n));

    // Mixed-radix counter over representative choices; class 0 stays fixed.
    std::vector<size_t> idx(classes.size(), 0);
    for (;;) {
        std::vector<Perm> gens{classes[0][0]};
        for (size_t c = 1; c < classes.size(); ++c) gens.push_back(classes[c][idx[c]]);
        if (subgroup_order(gens, full) != full) return false;
        size_t c = classes.size() - 1;
        for (;;) {
            if (c == 0) return true; // all combinations exhausted
            if (++idx[c] < classes[c].size()) break;
            idx[c] = 0;
            --c;
        }
    }
}

} // namespace detail

// Dedekind cycle types of charpoly(gamma) modulo successive good primes.
// gamma must be regular semisimple (squarefree charpoly) over Q.
inline GenericityReport genericity_heuristic(const NFMatrix &gamma, int primes_budget) {
    if (gamma.field().degree() != 1)
        throw err_field_mismatch("genericity heuristic expects rational entries");
    UPoly<NFElem> chi_k = charpoly(gamma);
    UPoly<Rat> chi;
    for (const auto &c : chi_k.coeffs) chi.coeffs.push_back(c.rat_value());
    chi.normalize();
    if (!upoly_is_squarefree(chi)) throw err_not_regular();

    const int n = chi.degree();
    GenericityReport rep;
    rep.charpoly = chi;

    // Monic integral model with the same splitting field: substitute t = u/c,
    // c = lcm of coefficient denominators, and scale by c^n.
    Int c(1);
    for (const auto &a : chi.coeffs) {
        Int d = a.get_den();
        c = c / gcd(c, d) * d;
    }
    std::vector<Int> ic(static_cast<size_t>(n) + 1);
    UPoly<Rat> chi_int;
    for (int i = 0; i <= n; ++i) {
        Rat scaled = chi.coeffs[i] * Rat(int_pow(c, static_cast<unsigned>(n - i)));
        ic[i] = scaled.get_num();
        chi_int.coeffs.push_back(Rat(ic[i]));
    }
    chi_int.normalize();
    Int disc = upoly_discriminant(chi_int).get_num();
    if (disc == 0) throw err_not_regular();

    long p = 1;
    int used = 0;
    while (used < primes_budget) {
        for (++p;; ++p) {
            bool isp = p >= 2;
            for (long d = 2; d * d <= p; ++d)
                if (p % d == 0) { isp = false; break; }
            if (isp) break;
        }
        if (disc % p == 0) continue;
        detail::FpPoly fp(static_cast<size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) {
            Int r = ic[i] % p;
            if (r < 0) r += p;
            fp[i] = r.get_si();
        }
        rep.primes_used.push_back(p);
        rep.cycle_types.push_back(detail::fp_cycle_type(fp, p));
        ++used;
        if (detail::types_force_symmetric_group(rep.cycle_types, n)) {
            rep.verdict = GenericityVerdict::weyl_contained_confirmed;
            return rep;
        }
    }
    return rep;
}

} // namespace bglab

#endif
