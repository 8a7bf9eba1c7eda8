#ifndef BGLAB_EXPPOLY_HPP
#define BGLAB_EXPPOLY_HPP

#include "bglab/mpoly.hpp"
#include "bglab/nfmatrix.hpp"

namespace bglab {

inline std::string product_var_name(int slot, int j) {
    return "x" + std::to_string(slot) + "_" + std::to_string(j);
}

namespace detail {

using SymMatrix = std::vector<std::vector<MPoly>>;

inline SymMatrix sym_from_nf(const NFMatrix &m, const std::vector<std::string> &vars) {
    const int n = m.dim();
    SymMatrix s(n, std::vector<MPoly>(n, mpoly_zero(m.field(), vars)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            s[i][j] = mpoly_const(m.field(), vars, m.at(i, j));
    return s;
}

inline SymMatrix sym_mul(const SymMatrix &a, const SymMatrix &b) {
    const int n = static_cast<int>(a.size());
    SymMatrix r(n, std::vector<MPoly>(n, mpoly_zero(a[0][0].field, a[0][0].vars)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            MPoly acc = mpoly_zero(a[0][0].field, a[0][0].vars);
            for (int k = 0; k < n; ++k) acc = acc + a[i][k] * b[k][j];
            r[i][j] = acc;
        }
    return r;
}

// g_i * diag(x_{i1}, ..., x_{in}) * g_i^{-1}, built entrywise:
// (a,b) |-> sum_j g[a][j] * ginv[j][b] * x_{ij}.
inline SymMatrix conjugated_diag(const NFMatrix &gi, int slot, const std::vector<std::string> &vars) {
    const int n = gi.dim();
    NFMatrix ginv = nf_inverse(gi);
    SymMatrix r(n, std::vector<MPoly>(n, mpoly_zero(gi.field(), vars)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            MPoly acc = mpoly_zero(gi.field(), vars);
            for (int j = 0; j < n; ++j) {
                NFElem coef = gi.at(a, j) * ginv.at(j, b);
                if (coef.is_zero_elem()) continue;
                acc = acc + coef * mpoly_var(gi.field(), vars, product_var_name(slot, j + 1));
            }
            r[a][b] = acc;
        }
    return r;
}

inline SymMatrix sym_from_polymatrix(const PolyMatrix &A, const std::vector<std::string> &vars) {
    const int n = A.n;
    int zi = -1;
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == "z") zi = static_cast<int>(i);
    if (zi < 0) throw err_var_mismatch("variable z missing");
    SymMatrix r(n, std::vector<MPoly>(n, mpoly_zero(A.field, vars)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            MPoly acc = mpoly_zero(A.field, vars);
            const UPoly<NFElem> &p = A.at(i, j);
            for (int k = 0; k <= p.degree(); ++k) {
                if (p.coeffs[k].is_zero_elem()) continue;
                std::vector<int> e(vars.size(), 0);
                e[static_cast<size_t>(zi)] = k;
                acc.insert_term(std::move(e), p.coeffs[k]);
            }
            r[i][j] = acc;
        }
    return r;
}

} // namespace detail

// Case 1 (all generators semisimple): the (alpha,beta)-entry of
// g^-1 [ prod_i g_i diag(x_{i1},...,x_{in}) g_i^-1 ] g as a polynomial in the
// x_{ij}.  Each factor contributes multilinearly.
inline MPoly build_case1_poly(const NFMatrix &g, const std::vector<NFMatrix> &g_list,
                              std::pair<int, int> entry) {
    const int n = g.dim();
    const int r = static_cast<int>(g_list.size());
    if (r == 0) throw err_dimension_mismatch("need at least one conjugator");
    for (const auto &gi : g_list) check_compatible(g, gi);
    if (entry.first < 1 || entry.first > n || entry.second < 1 || entry.second > n)
        throw err_dimension_mismatch("entry index out of range");

    std::vector<std::string> vars;
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= n; ++j) vars.push_back(product_var_name(i, j));

    detail::SymMatrix acc = detail::sym_from_nf(nf_inverse(g), vars);
    for (int i = 0; i < r; ++i)
        acc = detail::sym_mul(acc, detail::conjugated_diag(g_list[i], i + 1, vars));
    acc = detail::sym_mul(acc, detail::sym_from_nf(g, vars));

    MPoly p = acc[entry.first - 1][entry.second - 1];
    for (size_t vi = 0; vi < vars.size(); ++vi)
        if (p.deg_in(static_cast<int>(vi)) > 1)
            throw err_internal("build_case1_poly: lost per-factor multilinearity");
    return p;
}

// Case 2 (slot s is the unipotent one): the (alpha,beta)-entry of
// g^-1 [ prod_{i<s} (g_i D_i g_i^-1) * A(z) * prod_{i>s} (g_i D_i g_i^-1) ] g
// in the x_{ij} (i != s) and z.  g_list holds the r-1 semisimple conjugators
// in slot order; variables keep their original slot indices.
inline MPoly build_case2_poly(const NFMatrix &g, const std::vector<NFMatrix> &g_list,
                              const PolyMatrix &A, int s, std::pair<int, int> entry) {
    const int n = g.dim();
    const int r = static_cast<int>(g_list.size()) + 1;
    if (s < 1 || s > r) throw err_dimension_mismatch("unipotent slot out of range");
    if (A.n != n) throw err_dimension_mismatch("A(z) dimension mismatch");
    for (const auto &gi : g_list) check_compatible(g, gi);
    if (entry.first < 1 || entry.first > n || entry.second < 1 || entry.second > n)
        throw err_dimension_mismatch("entry index out of range");

    std::vector<std::string> vars;
    for (int i = 1; i <= r; ++i) {
        if (i == s) continue;
        for (int j = 1; j <= n; ++j) vars.push_back(product_var_name(i, j));
    }
    vars.push_back("z");

    detail::SymMatrix acc = detail::sym_from_nf(nf_inverse(g), vars);
    int gl = 0;
    for (int i = 1; i <= r; ++i) {
        if (i == s) {
            acc = detail::sym_mul(acc, detail::sym_from_polymatrix(A, vars));
        } else {
            acc = detail::sym_mul(acc, detail::conjugated_diag(g_list[gl], i, vars));
            ++gl;
        }
    }
    acc = detail::sym_mul(acc, detail::sym_from_nf(g, vars));
    return acc[entry.first - 1][entry.second - 1];
}

// psi_0, ..., psi_T with p = sum psi_k z^k.
inline std::vector<MPoly> z_coefficients(const MPoly &p) {
    int zi = p.var_index("z");
    if (zi < 0) return {p};
    return collect_var(p, zi);
}

inline int deg_z(const MPoly &p) {
    int zi = p.var_index("z");
    return zi < 0 ? 0 : p.deg_in(zi);
}

// Drop all z-degrees above t.
inline MPoly truncate_z(const MPoly &p, int t) {
    if (t < 0 || t > deg_z(p)) throw err_bad_truncation();
    int zi = p.var_index("z");
    if (zi < 0) return p;
    MPoly out = mpoly_zero(p.field, p.vars);
    for (const auto &[e, c] : p.terms)
        if (e[zi] <= t) out.insert_term(e, c);
    return out;
}

// Resultant of q and p_tilde with respect to z: the Sylvester determinant,
// expanded fraction-free over the multivariate ring.  The two structural
// facts from the construction -- deg_x f = t and the x^t coefficient equals
// +-psi_t^e -- are checked on the result; soundness (a joint root of q and
// p_tilde kills f) is inherited from the resultant.
inline MPoly resultant_z(const MPoly &q, const MPoly &p_tilde) {
    // Merge the two variable lists, keeping z last.
    std::vector<std::string> vars;
    auto push = [&](const std::string &v) {
        if (v == "z") return;
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    };
    for (const auto &v : q.vars) push(v);
    for (const auto &v : p_tilde.vars) push(v);
    vars.push_back("z");
    MPoly qa = extend_vars(q, vars);
    MPoly pa = extend_vars(p_tilde, vars);

    const int zi = static_cast<int>(vars.size()) - 1;
    const int e = qa.deg_in(zi);
    const int t = pa.deg_in(zi);
    if (e < 1 || t < 1) throw err_degenerate_resultant();

    std::vector<MPoly> qc = collect_var(qa, zi);
    std::vector<MPoly> pc = collect_var(pa, zi);
    const int N = e + t;
    MPoly zero = mpoly_zero(qa.field, vars);
    std::vector<std::vector<MPoly>> syl(N, std::vector<MPoly>(N, zero));
    for (int row = 0; row < t; ++row)
        for (int k = 0; k <= e; ++k) syl[row][row + e - k] = qc[k];
    for (int row = 0; row < e; ++row)
        for (int k = 0; k <= t; ++k) syl[t + row][row + t - k] = pc[k];
    MPoly f = mpoly_det(std::move(syl));

    int xi = f.var_index("x");
    if (xi >= 0) {
        if (f.deg_in(xi) != t) throw err_internal("resultant_z: deg_x != deg_z(p_tilde)");
        MPoly lead = collect_var(f, xi)[t];
        MPoly psi_t_e = mpoly_pow(pc[t], e);
        if (lead != psi_t_e && lead != -psi_t_e)
            throw err_internal("resultant_z: x^t coefficient is not +-psi_t^e");
    }
    return drop_var(f, "z");
}

} // namespace bglab

#endif
