#ifndef BGLAB_MPOLY_HPP
#define BGLAB_MPOLY_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "bglab/numberfield.hpp"

namespace bglab {

// Graded lexicographic order on exponent vectors: total degree first, then
// lexicographic.  Serialization iterates map order, so output is canonical.
struct GradedLexLess {
    bool operator()(const std::vector<int> &a, const std::vector<int> &b) const {
        int ta = std::accumulate(a.begin(), a.end(), 0);
        int tb = std::accumulate(b.begin(), b.end(), 0);
        if (ta != tb) return ta < tb;
        return a < b;
    }
};

// Sparse multivariate polynomial over the ambient field.  Zero coefficients
// are never stored; the variable list is an ordered part of the type, and
// binary operations demand identical lists (align first with extend_vars).
struct MPoly {
    NumberField field;
    std::vector<std::string> vars;
    std::map<std::vector<int>, NFElem, GradedLexLess> terms;

    bool is_zero_poly() const { return terms.empty(); }

    int var_index(const std::string &name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }

    int deg_in(int vi) const {
        int d = 0;
        for (const auto &[e, c] : terms) d = std::max(d, e[vi]);
        return d;
    }

    int total_degree() const {
        int d = -1;
        for (const auto &[e, c] : terms) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
        return d;
    }

    void insert_term(std::vector<int> exp, const NFElem &c) {
        if (c.is_zero_elem()) return;
        auto it = terms.find(exp);
        if (it == terms.end()) {
            terms.emplace(std::move(exp), c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero_elem()) terms.erase(it);
        }
    }

    bool operator==(const MPoly &o) const { return vars == o.vars && terms == o.terms; }
    bool operator!=(const MPoly &o) const { return !(*this == o); }
};

inline MPoly mpoly_zero(const NumberField &f, std::vector<std::string> vars) {
    return MPoly{f, std::move(vars), {}};
}

inline MPoly mpoly_const(const NumberField &f, std::vector<std::string> vars, const NFElem &c) {
    MPoly p = mpoly_zero(f, std::move(vars));
    p.insert_term(std::vector<int>(p.vars.size(), 0), c);
    return p;
}

inline MPoly mpoly_var(const NumberField &f, std::vector<std::string> vars, const std::string &name) {
    MPoly p = mpoly_zero(f, std::move(vars));
    int vi = p.var_index(name);
    if (vi < 0) throw err_var_mismatch("unknown variable " + name);
    std::vector<int> e(p.vars.size(), 0);
    e[vi] = 1;
    p.insert_term(std::move(e), NFElem::one(f));
    return p;
}

inline void check_vars(const MPoly &a, const MPoly &b) {
    if (a.vars != b.vars) throw err_var_mismatch();
    if (!a.field.same_as(b.field)) throw err_field_mismatch();
}

// Re-express p over a superset of its variables (order-preserving embedding).
inline MPoly extend_vars(const MPoly &p, const std::vector<std::string> &newvars) {
    std::vector<int> pos(p.vars.size());
    for (size_t i = 0; i < p.vars.size(); ++i) {
        int found = -1;
        for (size_t j = 0; j < newvars.size(); ++j)
            if (newvars[j] == p.vars[i]) { found = static_cast<int>(j); break; }
        if (found < 0) throw err_var_mismatch("extend_vars: variable " + p.vars[i] + " missing");
        pos[i] = found;
    }
    MPoly out = mpoly_zero(p.field, newvars);
    for (const auto &[e, c] : p.terms) {
        std::vector<int> ne(newvars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        out.insert_term(std::move(ne), c);
    }
    return out;
}

// Drop a variable that p does not actually use.
inline MPoly drop_var(const MPoly &p, const std::string &name) {
    int vi = p.var_index(name);
    if (vi < 0) return p;
    if (p.deg_in(vi) != 0) throw err_var_mismatch("drop_var: polynomial depends on " + name);
    std::vector<std::string> nv = p.vars;
    nv.erase(nv.begin() + vi);
    MPoly out = mpoly_zero(p.field, std::move(nv));
    for (const auto &[e, c] : p.terms) {
        std::vector<int> ne = e;
        ne.erase(ne.begin() + vi);
        out.insert_term(std::move(ne), c);
    }
    return out;
}

inline MPoly operator+(const MPoly &a, const MPoly &b) {
    check_vars(a, b);
    MPoly r = a;
    for (const auto &[e, c] : b.terms) r.insert_term(e, c);
    return r;
}

inline MPoly operator-(const MPoly &a) {
    MPoly r = a;
    for (auto &[e, c] : r.terms) c = NFElem::zero(r.field) - c;
    return r;
}

inline MPoly operator-(const MPoly &a, const MPoly &b) { return a + (-b); }

inline MPoly operator*(const MPoly &a, const MPoly &b) {
    check_vars(a, b);
    MPoly r = mpoly_zero(a.field, a.vars);
    for (const auto &[ea, ca] : a.terms)
        for (const auto &[eb, cb] : b.terms) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.insert_term(std::move(e), ca * cb);
        }
    return r;
}

inline MPoly operator*(const NFElem &s, const MPoly &a) {
    MPoly r = mpoly_zero(a.field, a.vars);
    for (const auto &[e, c] : a.terms) r.insert_term(e, s * c);
    return r;
}

inline MPoly mpoly_pow(const MPoly &a, int e) {
    if (e < 0) throw err_internal("mpoly_pow: negative exponent");
    MPoly acc = mpoly_const(a.field, a.vars, NFElem::one(a.field));
    for (int i = 0; i < e; ++i) acc = acc * a;
    return acc;
}

// Full evaluation; every variable needs a value.
inline NFElem mpoly_eval(const MPoly &p, const std::vector<NFElem> &assignment) {
    if (assignment.size() != p.vars.size())
        throw err_var_mismatch("eval needs a value for every variable");
    NFElem acc = NFElem::zero(p.field);
    for (const auto &[e, c] : p.terms) {
        NFElem term = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) term = term * assignment[i];
        acc = acc + term;
    }
    return acc;
}

// Coefficients of p by degree in one variable; each coefficient keeps the
// full variable list with that variable at degree zero.
inline std::vector<MPoly> collect_var(const MPoly &p, int vi) {
    int d = p.deg_in(vi);
    std::vector<MPoly> out(static_cast<size_t>(d) + 1, mpoly_zero(p.field, p.vars));
    for (const auto &[e, c] : p.terms) {
        std::vector<int> ne = e;
        int k = ne[vi];
        ne[vi] = 0;
        out[k].insert_term(std::move(ne), c);
    }
    return out;
}

// Exact division (throws if not exact), by graded-lex leading-term
// elimination.  Used by the fraction-free determinant.
inline MPoly mpoly_divexact(const MPoly &a, const MPoly &d) {
    check_vars(a, d);
    if (d.is_zero_poly()) throw err_div_by_zero("mpoly division by zero");
    MPoly r = a;
    MPoly q = mpoly_zero(a.field, a.vars);
    const auto &dl = *d.terms.rbegin();
    while (!r.is_zero_poly()) {
        const auto &rl = *r.terms.rbegin();
        std::vector<int> e(rl.first.size());
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = rl.first[i] - dl.first[i];
            if (e[i] < 0) throw err_internal("mpoly_divexact: not divisible");
        }
        NFElem c = rl.second / dl.second;
        MPoly t = mpoly_zero(a.field, a.vars);
        t.insert_term(e, c);
        q = q + t;
        r = r - t * d;
    }
    return q;
}

// Fraction-free Bareiss determinant of a square matrix of polynomials.
inline MPoly mpoly_det(std::vector<std::vector<MPoly>> a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) throw err_internal("mpoly_det: empty matrix");
    const NumberField &K = a[0][0].field;
    const auto vars = a[0][0].vars;
    MPoly zero = mpoly_zero(K, vars);
    MPoly prev = mpoly_const(K, vars, NFElem::one(K));
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero_poly()) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (!a[r][k].is_zero_poly()) { piv = r; break; }
            if (piv < 0) return zero;
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = mpoly_divexact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
        prev = a[k][k];
    }
    MPoly det = a[n - 1][n - 1];
    return sign > 0 ? det : -det;
}

enum class MPolyOp { add, mul };

inline MPoly mpoly_arith(const MPoly &a, const MPoly &b, MPolyOp op) {
    return op == MPolyOp::add ? a + b : a * b;
}

} // namespace bglab

#endif
