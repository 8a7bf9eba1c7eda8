#ifndef BGLAB_RATFUNC_HPP
#define BGLAB_RATFUNC_HPP

#include <random>

#include "bglab/mpoly.hpp"
#include "bglab/nfmatrix.hpp"
#include "bglab/upoly.hpp"

namespace bglab {

// Multivariate rational function over Q: a pair of MPolys over the rational
// field handle, reduced at content level only (full multivariate gcd is a
// non-goal).  Equality is by cross-multiplication.
struct RatF {
    MPoly num, den;

    RatF() = default;
    RatF(MPoly n, MPoly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero_poly()) throw err_div_by_zero("rational function with zero denominator");
        reduce_content();
    }

    bool is_zero_fn() const { return num.is_zero_poly(); }

    void reduce_content() {
        // Divide both parts by the rational content of the denominator, so
        // den has coprime integer coefficients and positive leading term.
        Int g(0), l(1);
        for (const auto &[e, c] : den.terms) {
            const Rat &r = c.rat_value();
            g = gcd(g, r.get_num());
            l = l / gcd(l, r.get_den()) * r.get_den();
        }
        Rat content(g, l);
        content.canonicalize();
        if (sgn(den.terms.rbegin()->second.rat_value()) < 0) content = -content;
        NFElem inv = NFElem::from_rat(num.field, Rat(1) / content);
        num = inv * num;
        den = inv * den;
    }

    friend RatF operator+(const RatF &a, const RatF &b) {
        return RatF(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RatF operator-(const RatF &a, const RatF &b) {
        return RatF(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend RatF operator-(const RatF &a) { return RatF(-a.num, a.den); }
    friend RatF operator*(const RatF &a, const RatF &b) { return RatF(a.num * b.num, a.den * b.den); }
    friend RatF operator/(const RatF &a, const RatF &b) {
        if (b.is_zero_fn()) throw err_div_by_zero("division by zero rational function");
        return RatF(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(const RatF &a, const RatF &b) { return a.num * b.den == b.num * a.den; }
    friend bool operator!=(const RatF &a, const RatF &b) { return !(a == b); }
};

inline bool is_zero(const RatF &x) { return x.is_zero_fn(); }
inline bool is_one(const RatF &x) { return x.num == x.den; }
inline RatF ring_zero(const RatF &like) {
    return RatF(mpoly_zero(like.den.field, like.den.vars),
                mpoly_const(like.den.field, like.den.vars, NFElem::one(like.den.field)));
}
inline RatF ring_one(const RatF &like) {
    MPoly one = mpoly_const(like.den.field, like.den.vars, NFElem::one(like.den.field));
    return RatF(one, one);
}
inline RatF ring_from_int(const RatF &like, long n) {
    return RatF(mpoly_const(like.den.field, like.den.vars, NFElem::from_rat(like.den.field, Rat(n))),
                mpoly_const(like.den.field, like.den.vars, NFElem::one(like.den.field)));
}

// Square matrix of rational functions over Q in the given variables.
struct RatFuncMatrix {
    std::vector<std::string> variables;
    int n = 0;
    std::vector<RatF> entries; // row-major

    const RatF &at(int i, int j) const { return entries[static_cast<size_t>(i) * n + j]; }
    RatF &at(int i, int j) { return entries[static_cast<size_t>(i) * n + j]; }
};

namespace detail {

// Krylov minimal polynomial over an arbitrary exact field K.
template <class K>
UPoly<K> generic_minpoly(const std::vector<std::vector<K>> &mat, const K &one) {
    const int n = static_cast<int>(mat.size());
    const int dim = n * n;
    K zero = ring_zero(one);
    std::vector<std::vector<K>> rows;
    std::vector<int> pivots;
    std::vector<std::vector<K>> power(n, std::vector<K>(n, zero));
    for (int i = 0; i < n; ++i) power[i][i] = one;
    for (int k = 0;; ++k) {
        std::vector<K> row(static_cast<size_t>(dim) + k + 1, zero);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) row[static_cast<size_t>(i) * n + j] = power[i][j];
        row[dim + k] = one;
        for (auto &r : rows) r.resize(static_cast<size_t>(dim) + k + 1, zero);
        for (size_t ri = 0; ri < rows.size(); ++ri) {
            int p = pivots[ri];
            if (is_zero(row[p])) continue;
            K f = row[p];
            for (size_t c = 0; c < row.size(); ++c) row[c] = row[c] - f * rows[ri][c];
        }
        int piv = -1;
        for (int i = 0; i < dim; ++i)
            if (!is_zero(row[i])) { piv = i; break; }
        if (piv < 0) {
            std::vector<K> coeffs(row.begin() + dim, row.end());
            return UPoly<K>(std::move(coeffs));
        }
        K inv = one / row[piv];
        for (auto &c : row) c = inv * c;
        rows.push_back(std::move(row));
        pivots.push_back(piv);
        // advance power <- power * mat
        std::vector<std::vector<K>> next(n, std::vector<K>(n, zero));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                K acc = zero;
                for (int l = 0; l < n; ++l) acc = acc + power[i][l] * mat[l][j];
                next[i][j] = acc;
            }
        power = std::move(next);
        if (k > n) throw err_internal("generic_minpoly: no dependence up to degree n");
    }
}

inline Rat eval_mpoly_at_rats(const MPoly &p, const std::vector<Rat> &point) {
    if (point.size() != p.vars.size()) throw err_var_mismatch("point size mismatch");
    Rat acc(0);
    for (const auto &[e, c] : p.terms) {
        Rat term = c.rat_value();
        for (size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) term *= point[i];
        acc += term;
    }
    return acc;
}

// Rationals ordered by height max(|p|, q), for the bounded-height search.
inline std::vector<Rat> rationals_by_height(long max_height) {
    std::vector<Rat> out;
    out.push_back(Rat(0));
    for (long h = 1; h <= max_height; ++h)
        for (long p = 1; p <= h; ++p)
            for (long q = 1; q <= h; ++q) {
                if (std::max(p, q) != h) continue;
                if (gcd(Int(p), Int(q)) != 1) continue;
                Rat r(p, q);
                out.push_back(r);
                out.push_back(-r);
            }
    return out;
}

} // namespace detail

struct SpecializationChecks {
    bool a_nonzero = false;
    bool all_discriminants_nonzero = false;
    bool semisimplicity_preserved = false;
    bool witness_survives = false;
};

struct SpecializationRecord {
    std::vector<Rat> point;
    std::vector<MPoly> avoided; // polynomials required nonzero at the point
    std::vector<NFMatrix> image_matrices;
    std::vector<bool> source_semisimple;
    SpecializationChecks checks;
};

// Specialization to a rational point: find values of the variables where the
// witness entry, the discriminants of the minimal polynomials of the
// semisimple sources, and all denominators stay nonzero, then evaluate.
// Rational points dodge finitely many hypersurfaces, so the seeded
// bounded-height search succeeds quickly on sane inputs.
inline SpecializationRecord specialize(const std::vector<RatFuncMatrix> &mats, const RatF &witness_entry,
                                       unsigned long seed, long max_tries) {
    if (mats.empty()) throw err_dimension_mismatch("no matrices to specialize");
    if (witness_entry.is_zero_fn()) throw err_zero_witness();
    const auto &vars = mats.front().variables;
    for (const auto &m : mats)
        if (m.variables != vars) throw err_var_mismatch("matrices over different variable sets");

    const NumberField Q = nf_rationals();
    SpecializationRecord rec;

    std::vector<MPoly> avoided;
    avoided.push_back(witness_entry.num);
    avoided.push_back(witness_entry.den);
    for (const auto &m : mats)
        for (const auto &e : m.entries) avoided.push_back(e.den);

    // Minimal polynomial and discriminant per matrix over Q(vars).
    for (const auto &m : mats) {
        std::vector<std::vector<RatF>> a(m.n, std::vector<RatF>(m.n, ring_zero(witness_entry)));
        for (int i = 0; i < m.n; ++i)
            for (int j = 0; j < m.n; ++j) a[i][j] = m.at(i, j);
        UPoly<RatF> mp = detail::generic_minpoly(a, ring_one(witness_entry));
        bool ss = upoly_is_squarefree(mp);
        rec.source_semisimple.push_back(ss);
        if (ss && mp.degree() >= 1) {
            RatF d = upoly_discriminant(mp);
            if (d.is_zero_fn()) throw err_internal("specialize: squarefree minpoly with zero discriminant");
            avoided.push_back(d.num);
            avoided.push_back(d.den);
        }
    }
    // Dedupe while keeping order, for a readable record.
    for (const auto &p : avoided) {
        if (p.total_degree() <= 0) continue; // constants never vanish
        bool seen = false;
        for (const auto &q : rec.avoided)
            if (q == p) { seen = true; break; }
        if (!seen) rec.avoided.push_back(p);
    }

    std::mt19937_64 rng(seed);
    auto pool = detail::rationals_by_height(6);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    bool found = false;
    for (long attempt = 0; attempt < max_tries && !found; ++attempt) {
        std::vector<Rat> point;
        for (size_t v = 0; v < vars.size(); ++v) point.push_back(pool[pick(rng)]);
        bool ok = true;
        for (const auto &p : avoided) {
            if (bglab::is_zero(detail::eval_mpoly_at_rats(p, point))) { ok = false; break; }
        }
        if (!ok) continue;
        rec.point = point;
        found = true;
    }
    if (!found) throw err_no_point_found();

    for (const auto &m : mats) {
        std::vector<NFElem> entries;
        for (const auto &e : m.entries) {
            Rat val = detail::eval_mpoly_at_rats(e.num, rec.point) /
                      detail::eval_mpoly_at_rats(e.den, rec.point);
            entries.push_back(NFElem::from_rat(Q, val));
        }
        rec.image_matrices.emplace_back(Q, m.n, std::move(entries));
    }

    Rat aval = detail::eval_mpoly_at_rats(witness_entry.num, rec.point) /
               detail::eval_mpoly_at_rats(witness_entry.den, rec.point);
    rec.checks.a_nonzero = !bglab::is_zero(aval);
    rec.checks.all_discriminants_nonzero = true; // enforced by the point search
    rec.checks.semisimplicity_preserved = true;
    for (size_t i = 0; i < mats.size(); ++i) {
        if (!rec.source_semisimple[i]) continue;
        if (!is_semisimple(rec.image_matrices[i])) rec.checks.semisimplicity_preserved = false;
    }
    rec.checks.witness_survives = rec.checks.a_nonzero;
    if (!rec.checks.a_nonzero || !rec.checks.semisimplicity_preserved)
        throw err_internal("specialize: checks failed at an admissible point");
    return rec;
}

} // namespace bglab

#endif
