#ifndef BGLAB_EMBEDDINGS_HPP
#define BGLAB_EMBEDDINGS_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "bglab/numberfield.hpp"

namespace bglab {

// Certified enclosure of one complex root of the field's minimal polynomial.
// Dyadic endpoints; width <= 2^-precision_bits; exactly one root inside.
struct EmbeddingBox {
    Rat real_lo, real_hi, imag_lo, imag_hi;
    int precision_bits = 0;

    Rat real_mid() const { return (real_lo + real_hi) / 2; }
    Rat imag_mid() const { return (imag_lo + imag_hi) / 2; }
};

namespace detail {

// Gaussian rational, exact.
struct QC {
    Rat re, im;

    QC() : re(0), im(0) {}
    QC(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    QC operator+(const QC &o) const { return {re + o.re, im + o.im}; }
    QC operator-(const QC &o) const { return {re - o.re, im - o.im}; }
    QC operator*(const QC &o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    QC operator/(const QC &o) const {
        Rat n = o.re * o.re + o.im * o.im;
        if (bglab::is_zero(n)) throw err_div_by_zero("complex division by zero");
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    bool operator==(const QC &o) const { return re == o.re && im == o.im; }

    QC rounded(unsigned bits) const { return {dyadic_round(re, bits), dyadic_round(im, bits)}; }
    Rat abs_upper() const { return abs(re) + abs(im); } // >= |z|
};

inline QC qc_eval(const UPoly<Rat> &f, const QC &z) {
    QC acc;
    for (int i = f.degree(); i >= 0; --i) acc = acc * z + QC(f.coeffs[i], Rat(0));
    return acc;
}

// Sign-change count of the Sturm chain at x.
inline int sturm_changes(const std::vector<UPoly<Rat>> &chain, const Rat &x) {
    int changes = 0, last = 0;
    for (const auto &p : chain) {
        int s = sgn(upoly_eval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

inline std::vector<UPoly<Rat>> sturm_chain(const UPoly<Rat> &f) {
    std::vector<UPoly<Rat>> chain{f, upoly_derivative(f)};
    while (!chain.back().is_zero_poly() && chain.back().degree() > 0) {
        auto [q, r] = upoly_divmod(chain[chain.size() - 2], chain.back());
        (void)q;
        if (r.is_zero_poly()) break;
        chain.push_back(-r);
    }
    return chain;
}

inline Rat cauchy_root_bound(const UPoly<Rat> &f) {
    Rat m(0);
    Rat lead(abs(f.leading()));
    for (int i = 0; i < f.degree(); ++i) {
        Rat c(abs(f.coeffs[i]));
        c /= lead;
        if (c > m) m = c;
    }
    return m + 1;
}

} // namespace detail

// Certified enclosures for all complex roots of the minimal polynomial.
//
// Approximations come from a Durand-Kerner sweep in dyadic arithmetic; the
// exact Sturm count fixes how many limits are real.  Certification is exact:
// with W_i = h(z_i) / prod_{j != i} (z_i - z_j) and R_i >= deg * |W_i|, the
// Lagrange identity  h(z) = prod_j (z - z_j) + sum_i W_i prod_{j != i} (z - z_j)
// plus Rouche on the circle |z - z_i| = 2 R_i shows that each disk of radius
// 2 R_i holds exactly one root once the inflated disks are pairwise disjoint.
// A box of half-width R_i around z_i then contains that root and no other.
inline std::vector<EmbeddingBox> embeddings(const NumberField &field, int precision_bits) {
    if (precision_bits < 16) throw err_internal("embeddings: precision_bits must be >= 16");
    const UPoly<Rat> &h = field.minpoly();
    const int n = h.degree();

    if (n == 1) {
        Rat root = -h.coeffs[0];
        return {EmbeddingBox{root, root, Rat(0), Rat(0), precision_bits}};
    }

    auto chain = detail::sturm_chain(h);
    Rat bound = detail::cauchy_root_bound(h);
    const int real_count = detail::sturm_changes(chain, -bound) - detail::sturm_changes(chain, bound);

    const Rat target_radius = Rat(1, 2) / Rat(int_pow(2, static_cast<unsigned>(precision_bits)));

    unsigned w = std::max(96u, static_cast<unsigned>(precision_bits) + 48u);
    std::vector<detail::QC> z(n);
    {
        detail::QC seed(Rat(2, 5), Rat(9, 10));
        detail::QC acc(Rat(1), Rat(0));
        for (int k = 0; k < n; ++k) {
            acc = (acc * seed).rounded(w);
            z[k] = detail::QC(bound * acc.re, bound * acc.im).rounded(w);
        }
    }

    auto dk_sweep = [&](int iterations) {
        for (int it = 0; it < iterations; ++it) {
            for (int i = 0; i < n; ++i) {
                detail::QC denom(Rat(1), Rat(0));
                for (int j = 0; j < n; ++j) {
                    if (j == i) continue;
                    denom = (denom * (z[i] - z[j])).rounded(w);
                }
                if (bglab::is_zero(denom.re) && bglab::is_zero(denom.im)) {
                    // Collision; nudge and let the next sweep separate them.
                    z[i].re += Rat(1, 1000) * Rat(i + 1);
                    continue;
                }
                detail::QC num = detail::qc_eval(h, z[i]).rounded(w + 16);
                z[i] = (z[i] - num / denom).rounded(w);
            }
        }
    };

    const int max_rounds = 48;
    for (int round = 0; round < max_rounds; ++round) {
        dk_sweep(round == 0 ? 64 : 16);

        // Pin the real limits to the real axis and force exact conjugate
        // symmetry on the rest.
        std::vector<detail::QC> pts = z;
        std::vector<int> by_abs_im(n);
        for (int i = 0; i < n; ++i) by_abs_im[i] = i;
        std::sort(by_abs_im.begin(), by_abs_im.end(), [&](int a, int b) {
            return Rat(abs(pts[a].im)) < Rat(abs(pts[b].im));
        });
        for (int k = 0; k < real_count; ++k) pts[by_abs_im[k]].im = 0;
        std::vector<detail::QC> cand;
        for (int k = 0; k < real_count; ++k) cand.push_back(pts[by_abs_im[k]]);
        int uppers = 0;
        for (int k = real_count; k < n; ++k) {
            const detail::QC &p = pts[by_abs_im[k]];
            if (sgn(p.im) > 0) {
                cand.push_back(p);
                cand.push_back(detail::QC(p.re, -p.im));
                ++uppers;
            }
        }
        if (2 * uppers != n - real_count) continue;

        // Exact Weierstrass data at the candidate points.
        bool ok = true;
        std::vector<Rat> radius(n, Rat(0));
        for (int i = 0; i < n && ok; ++i) {
            detail::QC denom(Rat(1), Rat(0));
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                if (cand[i] == cand[j]) { ok = false; break; }
                denom = denom * (cand[i] - cand[j]);
            }
            if (!ok) break;
            detail::QC wgt = detail::qc_eval(h, cand[i]) / denom;
            radius[i] = Rat(n) * wgt.abs_upper();
            if (radius[i] > target_radius) ok = false;
        }
        for (int i = 0; i < n && ok; ++i) {
            for (int j = i + 1; j < n && ok; ++j) {
                Rat dre(abs(cand[i].re - cand[j].re));
                Rat dim(abs(cand[i].im - cand[j].im));
                Rat dist_lb = dre > dim ? dre : dim;
                if (!(dist_lb > 2 * radius[i] + 2 * radius[j])) ok = false;
            }
        }
        if (!ok) {
            if (round % 3 == 2) w *= 2;
            continue;
        }

        std::vector<EmbeddingBox> out;
        for (int i = 0; i < n; ++i) {
            EmbeddingBox b;
            b.precision_bits = precision_bits;
            b.real_lo = cand[i].re - radius[i];
            b.real_hi = cand[i].re + radius[i];
            if (bglab::is_zero(cand[i].im)) {
                // The root in a real-centered certified disk is real: its
                // conjugate would be a second root of the same disk.
                b.imag_lo = b.imag_hi = Rat(0);
            } else {
                b.imag_lo = cand[i].im - radius[i];
                b.imag_hi = cand[i].im + radius[i];
            }
            out.push_back(std::move(b));
        }
        std::sort(out.begin(), out.end(), [](const EmbeddingBox &a, const EmbeddingBox &b) {
            Rat ra = a.real_mid(), rb = b.real_mid();
            if (ra != rb) return ra < rb;
            return a.imag_mid() < b.imag_mid();
        });
        return out;
    }
    throw err_internal("embeddings: refinement failed to certify (squarefree input expected)");
}

// log|x| under the embedding given by the box midpoint.  Numeric only: used
// to propose relations, never to verify them.
inline double log_abs_at_embedding(const NFElem &x, const EmbeddingBox &box) {
    detail::QC theta(box.real_mid(), box.imag_mid());
    detail::QC acc;
    const auto &c = x.coeffs();
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        acc = acc * theta + detail::QC(c[i], Rat(0));
    Rat norm2 = acc.re * acc.re + acc.im * acc.im;
    if (bglab::is_zero(norm2)) return -1e300;
    // log of a positive rational without overflowing doubles.
    signed long ne, de;
    double nd = mpz_get_d_2exp(&ne, norm2.get_num().get_mpz_t());
    double dd = mpz_get_d_2exp(&de, norm2.get_den().get_mpz_t());
    const double ln2 = 0.69314718055994530942;
    return 0.5 * ((std::log(nd) - std::log(dd)) + ln2 * (double)(ne - de));
}

} // namespace bglab

#endif
