#ifndef BGLAB_NFMATRIX_HPP
#define BGLAB_NFMATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "bglab/numberfield.hpp"

namespace bglab {

// Square matrix over the ambient number field, row-major.
class NFMatrix {
  public:
    NFMatrix() = default;
    NFMatrix(NumberField field, int n, std::vector<NFElem> entries)
        : field_(std::move(field)), n_(n), e_(std::move(entries)) {
        if (static_cast<int>(e_.size()) != n_ * n_) throw err_dimension_mismatch("entry count != n*n");
        for (const auto &x : e_)
            if (!x.field().same_as(field_)) throw err_field_mismatch("matrix entry in a different field");
    }

    static NFMatrix identity(const NumberField &f, int n) {
        std::vector<NFElem> e(static_cast<size_t>(n) * n, NFElem::zero(f));
        for (int i = 0; i < n; ++i) e[static_cast<size_t>(i) * n + i] = NFElem::one(f);
        return NFMatrix(f, n, std::move(e));
    }

    const NumberField &field() const { return field_; }
    int dim() const { return n_; }
    const NFElem &at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
    NFElem &at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
    const std::vector<NFElem> &entries() const { return e_; }

    bool operator==(const NFMatrix &o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const NFMatrix &o) const { return !(*this == o); }

    bool is_identity() const { return *this == identity(field_, n_); }

    // Canonical serialization, usable as a hash key in enumeration tables.
    std::string serial_key() const {
        std::string s;
        for (const auto &x : e_) {
            for (const auto &c : x.coeffs()) {
                s += rat_to_string(c);
                s += ',';
            }
            s += ';';
        }
        return s;
    }

  private:
    NumberField field_;
    int n_ = 0;
    std::vector<NFElem> e_;
};

inline void check_compatible(const NFMatrix &a, const NFMatrix &b) {
    if (a.dim() != b.dim()) throw err_dimension_mismatch();
    if (!a.field().same_as(b.field())) throw err_field_mismatch();
}

inline NFMatrix operator*(const NFMatrix &a, const NFMatrix &b) {
    check_compatible(a, b);
    const int n = a.dim();
    NFMatrix r = NFMatrix::identity(a.field(), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            NFElem acc = NFElem::zero(a.field());
            for (int k = 0; k < n; ++k) acc = acc + a.at(i, k) * b.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

inline NFMatrix operator+(const NFMatrix &a, const NFMatrix &b) {
    check_compatible(a, b);
    NFMatrix r = a;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

inline NFMatrix operator-(const NFMatrix &a, const NFMatrix &b) {
    check_compatible(a, b);
    NFMatrix r = a;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}

inline NFMatrix scalar_mul(const NFElem &s, const NFMatrix &a) {
    NFMatrix r = a;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r.at(i, j) = s * a.at(i, j);
    return r;
}

// Fraction-free (Bareiss) determinant; exact divisions by earlier pivots.
inline NFElem nf_det(const NFMatrix &m) {
    const int n = m.dim();
    NFElem zero = NFElem::zero(m.field());
    std::vector<std::vector<NFElem>> a(n, std::vector<NFElem>(n, zero));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    NFElem prev = NFElem::one(m.field());
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero_elem()) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (!a[r][k].is_zero_elem()) { piv = r; break; }
            if (piv < 0) return zero;
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    NFElem det = a[n - 1][n - 1];
    return sign > 0 ? det : zero - det;
}

inline NFMatrix nf_inverse(const NFMatrix &m) {
    const int n = m.dim();
    NFElem zero = NFElem::zero(m.field());
    NFElem one = NFElem::one(m.field());
    std::vector<std::vector<NFElem>> a(n, std::vector<NFElem>(2 * n, zero));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
        a[i][n + i] = one;
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!a[r][col].is_zero_elem()) { piv = r; break; }
        if (piv < 0) throw err_not_invertible();
        std::swap(a[piv], a[col]);
        NFElem inv = a[col][col].inverse();
        for (int c = col; c < 2 * n; ++c) a[col][c] = inv * a[col][c];
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero_elem()) continue;
            NFElem f = a[r][col];
            for (int c = col; c < 2 * n; ++c) a[r][c] = a[r][c] - f * a[col][c];
        }
    }
    NFMatrix out = NFMatrix::identity(m.field(), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = a[i][n + j];
    return out;
}

inline NFMatrix nf_pow(const NFMatrix &m, long e) {
    if (e == 0) return NFMatrix::identity(m.field(), m.dim());
    NFMatrix b = e < 0 ? nf_inverse(m) : m;
    unsigned long k = e < 0 ? 0UL - static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    NFMatrix acc = NFMatrix::identity(m.field(), m.dim());
    while (k) {
        if (k & 1) acc = acc * b;
        b = b * b;
        k >>= 1;
    }
    return acc;
}

// charpoly(gamma) = det(t*I - gamma), computed fraction-free over K[t].
inline UPoly<NFElem> charpoly(const NFMatrix &m) {
    const int n = m.dim();
    NFElem zero = NFElem::zero(m.field());
    NFElem one = NFElem::one(m.field());
    using P = UPoly<NFElem>;
    std::vector<std::vector<P>> a(n, std::vector<P>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) a[i][j] = P({zero - m.at(i, j), one});
            else a[i][j] = upoly_constant(zero - m.at(i, j));
        }
    P prev = upoly_constant(one);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero_poly()) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (!a[r][k].is_zero_poly()) { piv = r; break; }
            if (piv < 0) return P{};
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = upoly_divexact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
        prev = a[k][k];
    }
    P chi = a[n - 1][n - 1];
    if (sign < 0) chi = -chi;
    if (chi.degree() != n || !is_one(chi.leading()))
        throw err_internal("charpoly: result not monic of degree n");
    return chi;
}

inline NFMatrix upoly_eval_matrix(const UPoly<NFElem> &f, const NFMatrix &m) {
    NFMatrix acc = NFMatrix::identity(m.field(), m.dim());
    acc = scalar_mul(NFElem::zero(m.field()), acc);
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * m;
        for (int d = 0; d < m.dim(); ++d) acc.at(d, d) = acc.at(d, d) + f.coeffs[i];
    }
    return acc;
}

// Least-degree monic annihilator, found as the first linear dependence among
// I, gamma, gamma^2, ... acting on the full matrix vectorization.
inline UPoly<NFElem> minpoly(const NFMatrix &m) {
    const int n = m.dim();
    const int dim = n * n;
    NFElem zero = NFElem::zero(m.field());
    // Reduced rows with pivot bookkeeping; each row is [vec | combination].
    std::vector<std::vector<NFElem>> rows;
    std::vector<int> pivots;
    NFMatrix power = NFMatrix::identity(m.field(), n);
    for (int k = 0;; ++k) {
        std::vector<NFElem> row(static_cast<size_t>(dim) + k + 1, zero);
        for (int i = 0; i < dim; ++i) row[i] = power.entries()[i];
        row[dim + k] = NFElem::one(m.field());
        for (auto &r : rows) r.resize(static_cast<size_t>(dim) + k + 1, zero);
        // Eliminate against existing rows.
        for (size_t ri = 0; ri < rows.size(); ++ri) {
            int p = pivots[ri];
            if (row[p].is_zero_elem()) continue;
            NFElem f = row[p];
            for (size_t c = 0; c < row.size(); ++c) row[c] = row[c] - f * rows[ri][c];
        }
        int piv = -1;
        for (int i = 0; i < dim; ++i)
            if (!row[i].is_zero_elem()) { piv = i; break; }
        if (piv < 0) {
            // Dependence: minpoly coefficients sit in the combination part.
            std::vector<NFElem> coeffs(row.begin() + dim, row.end());
            UPoly<NFElem> mp(std::move(coeffs));
            if (!upoly_is_monic(mp)) throw err_internal("minpoly: not monic");
            return mp;
        }
        NFElem inv = row[piv].inverse();
        for (auto &c : row) c = inv * c;
        rows.push_back(std::move(row));
        pivots.push_back(piv);
        power = power * m;
        if (k > n) throw err_internal("minpoly: no dependence up to degree n");
    }
}

// Semisimple over char 0  <=>  squarefree minimal polynomial.
inline bool is_semisimple(const NFMatrix &m) {
    return upoly_is_squarefree(minpoly(m));
}

inline bool nf_pow_nilpotent_zero(const NFMatrix &nu) {
    NFMatrix acc = nu;
    NFMatrix zero = scalar_mul(NFElem::zero(nu.field()), nu);
    for (int k = 1; k < nu.dim(); ++k) {
        if (acc == zero) return true;
        acc = acc * nu;
    }
    return acc == zero;
}

inline bool is_unipotent(const NFMatrix &m) {
    return nf_pow_nilpotent_zero(m - NFMatrix::identity(m.field(), m.dim()));
}

struct JordanPair {
    NFMatrix semisimple_part; // sigma
    NFMatrix unipotent_part;  // upsilon
};

// Multiplicative Jordan decomposition gamma = sigma * upsilon.  The additive
// semisimple part is produced by Newton iteration against the squarefree part
// of the minimal polynomial, entirely inside K[gamma], so sigma is an exact
// polynomial expression in gamma.
inline JordanPair jordan_chevalley(const NFMatrix &gamma) {
    if (nf_det(gamma).is_zero_elem()) throw err_not_invertible("jordan_chevalley needs invertible input");
    const NumberField &K = gamma.field();
    UPoly<NFElem> m = minpoly(gamma);
    UPoly<NFElem> s = squarefree_part(m);
    NFMatrix id = NFMatrix::identity(K, gamma.dim());
    if (s == m) return {gamma, id};

    NFElem zero = NFElem::zero(K), one = NFElem::one(K);
    UPoly<NFElem> tau({zero, one});
    auto mod_m = [&](const UPoly<NFElem> &p) { return upoly_divmod(p, m).second; };
    auto compose_mod = [&](const UPoly<NFElem> &f, const UPoly<NFElem> &x) {
        UPoly<NFElem> acc;
        for (int i = f.degree(); i >= 0; --i)
            acc = mod_m(acc * x + upoly_constant(f.coeffs[i]));
        return acc;
    };
    UPoly<NFElem> sprime = upoly_derivative(s);
    const int max_iter = 2 * gamma.dim() + 4;
    int it = 0;
    for (; it < max_iter; ++it) {
        UPoly<NFElem> val = compose_mod(s, tau);
        if (val.is_zero_poly()) break;
        UPoly<NFElem> der = compose_mod(sprime, tau);
        auto [d, u, v] = upoly_xgcd(der, m);
        (void)v;
        if (d.degree() != 0) throw err_internal("jordan_chevalley: derivative not invertible mod minpoly");
        UPoly<NFElem> der_inv = mod_m(u);
        tau = mod_m(tau - val * der_inv);
    }
    if (it == max_iter) throw err_internal("jordan_chevalley: Newton iteration did not converge");

    NFMatrix sigma = upoly_eval_matrix(tau, gamma);
    NFMatrix upsilon = nf_inverse(sigma) * gamma;
    if (sigma * upsilon != gamma || upsilon * sigma != gamma)
        throw err_internal("jordan_chevalley: parts do not commute to gamma");
    NFMatrix nilp = upsilon - id;
    if (!nf_pow_nilpotent_zero(nilp)) throw err_internal("jordan_chevalley: upsilon not unipotent");
    return {sigma, upsilon};
}

struct EigenData {
    std::vector<NFElem> eigenvalues;      // with multiplicity, discovery order
    std::optional<NFMatrix> diagonalizer; // g with g^-1 gamma g diagonal, when available
};

class NotSplitError : public Error {
  public:
    explicit NotSplitError(UPoly<NFElem> factor)
        : Error("NotSplit", "characteristic polynomial has an unsplit factor of degree " +
                                std::to_string(factor.degree())),
          factor_(std::move(factor)) {}
    const UPoly<NFElem> &factor() const { return factor_; }

  private:
    UPoly<NFElem> factor_;
};

// Exact kernel basis of m, columns as vectors, via reduced row echelon form.
inline std::vector<std::vector<NFElem>> nf_kernel(const NFMatrix &m) {
    const int n = m.dim();
    NFElem zero = NFElem::zero(m.field()), one = NFElem::one(m.field());
    std::vector<std::vector<NFElem>> a(n, std::vector<NFElem>(n, zero));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    std::vector<int> pivot_of_row;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int piv = -1;
        for (int r = row; r < n; ++r)
            if (!a[r][col].is_zero_elem()) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[piv], a[row]);
        NFElem inv = a[row][col].inverse();
        for (int c = 0; c < n; ++c) a[row][c] = inv * a[row][c];
        for (int r = 0; r < n; ++r) {
            if (r == row || a[r][col].is_zero_elem()) continue;
            NFElem f = a[r][col];
            for (int c = 0; c < n; ++c) a[r][c] = a[r][c] - f * a[row][c];
        }
        pivot_of_row.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(n, false);
    for (int p : pivot_of_row) is_pivot[p] = true;
    std::vector<std::vector<NFElem>> basis;
    for (int free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<NFElem> v(n, zero);
        v[free_col] = one;
        for (size_t r = 0; r < pivot_of_row.size(); ++r)
            v[pivot_of_row[r]] = zero - a[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Roots of charpoly lying in the ambient field.  Discovery is a rational-root
// scan (whenever the characteristic polynomial has rational coefficients)
// plus exact verification of caller-registered candidates and, for proper
// extensions, the small default pool {+-theta^k}.  Every accepted root is
// deflated exactly; a leftover factor raises NotSplit carrying that factor.
inline EigenData eigenvalues_in_field(const NFMatrix &gamma,
                                      const std::vector<NFElem> &registered_candidates = {}) {
    const NumberField &K = gamma.field();
    UPoly<NFElem> chi = charpoly(gamma);

    std::vector<NFElem> candidates;
    auto push_unique = [&](const NFElem &c) {
        if (std::find(candidates.begin(), candidates.end(), c) == candidates.end())
            candidates.push_back(c);
    };
    bool rational_coeffs = true;
    for (const auto &c : chi.coeffs)
        if (!c.is_rational()) { rational_coeffs = false; break; }
    if (rational_coeffs) {
        UPoly<Rat> chi_q;
        for (const auto &c : chi.coeffs) chi_q.coeffs.push_back(c.rat_value());
        chi_q.normalize();
        for (const Rat &r : rational_roots(chi_q)) push_unique(NFElem::from_rat(K, r));
    }
    for (const auto &c : registered_candidates) {
        if (!c.field().same_as(K)) throw err_field_mismatch("candidate root in a different field");
        push_unique(c);
    }
    if (K.degree() >= 2) {
        NFElem theta = NFElem::gen(K);
        NFElem p = theta;
        for (int k = 1; k < K.degree(); ++k) {
            push_unique(p);
            push_unique(NFElem::zero(K) - p);
            p = p * theta;
        }
    }

    std::vector<NFElem> eigen;
    UPoly<NFElem> rem = chi;
    for (const auto &cand : candidates) {
        while (rem.degree() > 0 && upoly_eval(rem, cand).is_zero_elem()) {
            eigen.push_back(cand);
            rem = upoly_divexact(rem, upoly_linear_root(cand));
        }
    }
    if (rem.degree() > 0) throw NotSplitError(rem);

    EigenData out;
    out.eigenvalues = eigen;
    if (!is_semisimple(gamma)) return out;

    // Group by distinct eigenvalue; exact eigenvector bases fill g's columns.
    std::vector<NFElem> distinct;
    for (const auto &l : eigen)
        if (std::find(distinct.begin(), distinct.end(), l) == distinct.end()) distinct.push_back(l);
    const int n = gamma.dim();
    NFMatrix g = NFMatrix::identity(K, n);
    std::vector<NFElem> ordered;
    int col = 0;
    for (const auto &l : distinct) {
        NFMatrix shifted = gamma;
        for (int i = 0; i < n; ++i) shifted.at(i, i) = shifted.at(i, i) - l;
        auto basis = nf_kernel(shifted);
        for (const auto &v : basis) {
            if (col >= n) throw err_internal("eigenvalues_in_field: too many eigenvectors");
            for (int i = 0; i < n; ++i) g.at(i, col) = v[i];
            ordered.push_back(l);
            ++col;
        }
    }
    if (col != n) throw err_internal("eigenvalues_in_field: eigenvector count mismatch");
    NFMatrix check = nf_inverse(g) * gamma * g;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j && check.at(i, j) != ordered[i]) throw err_internal("diagonalizer check failed");
            if (i != j && !check.at(i, j).is_zero_elem()) throw err_internal("diagonalizer check failed");
        }
    out.eigenvalues = ordered;
    out.diagonalizer = g;
    return out;
}

// Matrix of univariate polynomials in z; evaluation at any integer is an
// NFMatrix.
struct PolyMatrix {
    NumberField field;
    int n = 0;
    std::vector<UPoly<NFElem>> entries; // row-major

    const UPoly<NFElem> &at(int i, int j) const { return entries[static_cast<size_t>(i) * n + j]; }
    UPoly<NFElem> &at(int i, int j) { return entries[static_cast<size_t>(i) * n + j]; }

    NFMatrix eval_at(long m) const {
        NFElem x = NFElem::from_rat(field, Rat(m));
        std::vector<NFElem> e;
        e.reserve(entries.size());
        for (const auto &p : entries) e.push_back(upoly_eval(p, x));
        return NFMatrix(field, n, std::move(e));
    }
};

// A(z) = sum_{k<n} C(z,k) nu^k with nu = upsilon - I, so A(m) = upsilon^m for
// every integer m.  C(z,k) is expanded exactly as z(z-1)...(z-k+1)/k!.
inline PolyMatrix unipotent_power_matrix(const NFMatrix &upsilon) {
    const NumberField &K = upsilon.field();
    const int n = upsilon.dim();
    NFMatrix id = NFMatrix::identity(K, n);
    NFMatrix nu = upsilon - id;
    if (!nf_pow_nilpotent_zero(nu)) throw err_not_unipotent();

    NFElem zero = NFElem::zero(K), one = NFElem::one(K);
    PolyMatrix A{K, n, std::vector<UPoly<NFElem>>(static_cast<size_t>(n) * n)};

    UPoly<NFElem> binom = upoly_constant(one); // C(z,0) = 1
    NFMatrix nu_pow = id;
    for (int k = 0; k < n; ++k) {
        if (k > 0) {
            // C(z,k) = C(z,k-1) * (z - (k-1)) / k
            UPoly<NFElem> lin({NFElem::from_rat(K, Rat(-(k - 1))), one});
            NFElem invk = NFElem::from_rat(K, Rat(1, k));
            binom = invk * (binom * lin);
            nu_pow = nu_pow * nu;
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const NFElem &c = nu_pow.at(i, j);
                if (c.is_zero_elem()) continue;
                A.at(i, j) = A.at(i, j) + c * binom;
            }
        (void)zero;
    }
    for (long m = -2; m <= 2; ++m) {
        if (A.eval_at(m) != nf_pow(upsilon, m))
            throw err_internal("unipotent_power_matrix: A(m) != upsilon^m");
    }
    return A;
}

} // namespace bglab

#endif
