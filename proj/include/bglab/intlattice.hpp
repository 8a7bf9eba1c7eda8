#ifndef BGLAB_INTLATTICE_HPP
#define BGLAB_INTLATTICE_HPP

#include <vector>

#include "bglab/rat.hpp"

namespace bglab {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

inline bool intvec_is_zero(const IntVec &v) {
    for (const Int &x : v) if (x != 0) return false;
    return true;
}

// Row-style Hermite normal form of the lattice spanned by the input rows:
// row echelon, positive pivots, entries above each pivot reduced into
// [0, pivot).  Zero rows are dropped, so equal lattices give equal bases.
inline IntMat hermite_normal_form(IntMat rows) {
    if (rows.empty()) return rows;
    const size_t cols = rows[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
        // Euclid downward on this column.
        for (;;) {
            size_t best = rank;
            bool any = false;
            for (size_t r = rank; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                if (!any || abs(rows[r][col]) < abs(rows[best][col]) || rows[best][col] == 0) {
                    best = r;
                    any = true;
                }
            }
            if (!any) break;
            std::swap(rows[rank], rows[best]);
            bool reduced_all = true;
            for (size_t r = rank + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[rank][col].get_mpz_t());
                for (size_t c = 0; c < cols; ++c) rows[r][c] -= q * rows[rank][c];
                if (rows[r][col] != 0) reduced_all = false;
            }
            if (reduced_all) break;
        }
        if (rows[rank][col] == 0) continue;
        if (rows[rank][col] < 0)
            for (size_t c = 0; c < cols; ++c) rows[rank][c] = -rows[rank][c];
        // Reduce entries above the pivot into [0, pivot).
        for (size_t r = 0; r < rank; ++r) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[rank][col].get_mpz_t());
            if (q != 0)
                for (size_t c = 0; c < cols; ++c) rows[r][c] -= q * rows[rank][c];
        }
        ++rank;
    }
    rows.resize(rank);
    return rows;
}

// Textbook LLL with delta = 3/4 over exact rational Gram-Schmidt.  Desk-scale
// dimensions only; used to propose integer relations, never to certify them.
inline IntMat lll_reduce(IntMat basis) {
    // Drop zero rows up front.
    IntMat b;
    for (auto &row : basis) if (!intvec_is_zero(row)) b.push_back(row);
    const size_t n = b.size();
    if (n == 0) return b;
    const size_t m = b[0].size();
    const Rat delta(3, 4);

    std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(0)));
    std::vector<Rat> norm2(n, Rat(0)); // squared lengths of the GS vectors

    std::vector<std::vector<Rat>> gs(n, std::vector<Rat>(m, Rat(0)));
    auto recompute_gs = [&]() {
        for (size_t i = 0; i < n; ++i) {
            for (size_t c = 0; c < m; ++c) gs[i][c] = Rat(b[i][c]);
            for (size_t j = 0; j < i; ++j) {
                Rat dot(0);
                for (size_t c = 0; c < m; ++c) dot += Rat(b[i][c]) * gs[j][c];
                mu[i][j] = bglab::is_zero(norm2[j]) ? Rat(0) : dot / norm2[j];
                for (size_t c = 0; c < m; ++c) gs[i][c] -= mu[i][j] * gs[j][c];
            }
            norm2[i] = 0;
            for (size_t c = 0; c < m; ++c) norm2[i] += gs[i][c] * gs[i][c];
        }
    };
    recompute_gs();

    size_t k = 1;
    size_t guard = 0;
    const size_t guard_max = 100000;
    while (k < n && ++guard < guard_max) {
        for (size_t j = k; j-- > 0;) {
            Int r = rat_round(mu[k][j]);
            if (r != 0) {
                for (size_t c = 0; c < m; ++c) b[k][c] -= r * b[j][c];
                recompute_gs();
            }
        }
        Rat lhs = norm2[k];
        Rat rhs = (delta - mu[k][k - 1] * mu[k][k - 1]) * norm2[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            recompute_gs();
            k = k > 1 ? k - 1 : 1;
        }
    }
    return b;
}

} // namespace bglab

#endif
