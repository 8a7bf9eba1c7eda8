#ifndef BGLAB_MEMBERSHIP_HPP
#define BGLAB_MEMBERSHIP_HPP

#include <functional>
#include <map>
#include <optional>
#include <thread>
#include <unordered_map>

#include "bglab/exppoly.hpp"
#include "bglab/multrel.hpp"

namespace bglab {

// gamma^m = gamma_1^{a_1} ... gamma_r^{a_r}, exactly.
struct MembershipWitness {
    long m = 0;
    std::vector<long> exponents;
};

struct JReport {
    long m_range = 0;
    long exponent_box = 0;
    std::vector<MembershipWitness> witnesses; // sorted by m, lex-least exponents
    bool complete_within_budget = true;
};

namespace detail {

// Power tables g^e for e in [-box, box].
inline std::vector<NFMatrix> matrix_power_table(const NFMatrix &g, long box) {
    std::vector<NFMatrix> t;
    t.reserve(2 * box + 1);
    NFMatrix cur = nf_pow(g, -box);
    for (long e = -box; e <= box; ++e) {
        t.push_back(cur);
        if (e < box) cur = cur * g;
    }
    return t;
}

} // namespace detail

// J = { m : gamma^m in <gamma_1> ... <gamma_r> }, scanned over |m| <= m_range
// with exponents ||a||_inf <= box.  Meet-in-the-middle: the left ceil(r/2)
// factors are hashed by canonical serialization, the right side is probed.
// The recorded witness is the lexicographically least exponent tuple.
inline JReport compute_J(const NFMatrix &gamma, const std::vector<NFMatrix> &gens, long m_range,
                         long box, int threads = 1) {
    if (m_range < 1 || box < 1) throw err_internal("compute_J: m_range and box must be >= 1");
    for (const auto &g : gens) check_compatible(gamma, g);
    if (nf_det(gamma).is_zero_elem()) throw err_not_invertible("gamma is singular");
    for (const auto &g : gens)
        if (nf_det(g).is_zero_elem()) throw err_not_invertible("generator is singular");

    const int r = static_cast<int>(gens.size());
    const int h = (r + 1) / 2;
    const long side = 2 * box + 1;

    {
        double left = 1;
        for (int i = 0; i < h; ++i) left *= static_cast<double>(side);
        if (left > 4.0e6) throw err_internal("compute_J: left product table too large for this box");
    }

    std::vector<std::vector<NFMatrix>> pow_tab;
    std::vector<std::vector<NFMatrix>> inv_pow_tab; // tables for g^-e, right side
    for (int i = 0; i < r; ++i) {
        pow_tab.push_back(detail::matrix_power_table(gens[i], box));
        if (i >= h) inv_pow_tab.push_back(detail::matrix_power_table(nf_inverse(gens[i]), box));
    }

    // Left table: serialization -> lex-least (a_1..a_h).
    std::unordered_map<std::string, std::vector<long>> left;
    {
        std::vector<long> a(h, 0);
        std::function<void(int, const NFMatrix &)> rec = [&](int depth, const NFMatrix &acc) {
            if (depth == h) {
                left.emplace(acc.serial_key(), a); // first in lex order wins
                return;
            }
            for (long e = -box; e <= box; ++e) {
                a[depth] = e;
                rec(depth + 1, acc * pow_tab[depth][e + box]);
            }
        };
        rec(0, NFMatrix::identity(gamma.field(), gamma.dim()));
    }

    // Right side per m: probe gamma^m * (g_{h+1}^{a_{h+1}} ... g_r^{a_r})^-1.
    auto scan_range = [&](long lo, long hi, std::vector<MembershipWitness> &out) {
        NFMatrix gm = nf_pow(gamma, lo);
        for (long m = lo; m <= hi; ++m) {
            std::optional<std::vector<long>> best;
            std::vector<long> a(static_cast<size_t>(r - h), 0);
            std::function<void(int, const NFMatrix &)> rec = [&](int depth, const NFMatrix &rinv) {
                if (depth == r - h) {
                    auto it = left.find((gm * rinv).serial_key());
                    if (it != left.end()) {
                        std::vector<long> full = it->second;
                        full.insert(full.end(), a.begin(), a.end());
                        if (!best || full < *best) best = std::move(full);
                    }
                    return;
                }
                // rinv accumulates the inverse product from the left:
                // appending factor g_i^{e} multiplies rinv by g_i^{-e} on the
                // left, and g_i^{-e} = (g_i^{-1})^{e} sits at index e + box.
                for (long e = -box; e <= box; ++e) {
                    a[depth] = e;
                    rec(depth + 1, inv_pow_tab[depth][e + box] * rinv);
                }
            };
            rec(0, NFMatrix::identity(gamma.field(), gamma.dim()));
            if (best) {
                MembershipWitness w;
                w.m = m;
                w.exponents = *best;
                out.push_back(std::move(w));
            }
            gm = gm * gamma;
        }
    };

    JReport rep;
    rep.m_range = m_range;
    rep.exponent_box = box;

    if (threads <= 1) {
        scan_range(-m_range, m_range, rep.witnesses);
    } else {
        const long total = 2 * m_range + 1;
        const int nts = static_cast<int>(std::min<long>(threads, total));
        std::vector<std::vector<MembershipWitness>> parts(nts);
        std::vector<std::thread> pool;
        long chunk = (total + nts - 1) / nts;
        for (int t = 0; t < nts; ++t) {
            long lo = -m_range + t * chunk;
            long hi = std::min(m_range, lo + chunk - 1);
            if (lo > hi) continue;
            pool.emplace_back([&, lo, hi, t] { scan_range(lo, hi, parts[t]); });
        }
        for (auto &th : pool) th.join();
        for (auto &p : parts)
            rep.witnesses.insert(rep.witnesses.end(), p.begin(), p.end());
    }

    // Exact re-verification of every recorded witness.
    for (const auto &w : rep.witnesses) {
        NFMatrix prod = NFMatrix::identity(gamma.field(), gamma.dim());
        for (int i = 0; i < r; ++i) prod = prod * nf_pow(gens[i], w.exponents[i]);
        if (prod != nf_pow(gamma, w.m)) throw err_internal("compute_J: witness failed re-verification");
    }
    return rep;
}

// Laurent solution scan for f(mu^m, mu_1^{a_1}, ..., mu_d^{a_d}) = 0 with the
// non-constancy proviso.  One exponent tuple is kept per m (lex-least); the
// difference analysis lists consecutive exponent differences, desk-scale data
// for the coset structure of the solution set.
struct MReport {
    long m_range = 0;
    long exponent_box = 0;
    std::vector<std::pair<long, std::vector<long>>> solutions;
    std::vector<std::vector<long>> difference_analysis;
};

inline MReport laurent_enumerate(const MPoly &f, const NFElem &mu, const std::vector<NFElem> &mu_list,
                                 long m_range, long box) {
    if (f.vars.size() != mu_list.size() + 1)
        throw err_var_mismatch("f needs variables (x, x_1, ..., x_d)");
    if (mu.is_zero_elem()) throw err_zero_element();
    for (const auto &m : mu_list)
        if (m.is_zero_elem()) throw err_zero_element();

    const NumberField &K = f.field;
    const size_t d = mu_list.size();
    std::vector<MPoly> xcoeffs = collect_var(f, 0); // by degree in x
    const size_t T = xcoeffs.size() - 1;

    std::vector<NFElem> mu_pow;
    for (long m = -m_range; m <= m_range; ++m) mu_pow.push_back(mu.pow(m));
    std::vector<std::vector<NFElem>> tab(d);
    for (size_t i = 0; i < d; ++i) {
        NFElem inv = mu_list[i].inverse();
        NFElem cur = inv.pow(box);
        for (long e = -box; e <= box; ++e) {
            tab[i].push_back(cur);
            cur = cur * mu_list[i];
        }
    }

    std::map<long, std::vector<long>> found;
    std::vector<long> a(d, -box);
    std::vector<NFElem> assign(f.vars.size(), NFElem::one(K));
    for (;;) {
        for (size_t i = 0; i < d; ++i) assign[i + 1] = tab[i][a[i] + box];
        std::vector<NFElem> vals;
        vals.reserve(T + 1);
        bool nonconstant = false;
        for (size_t k = 0; k <= T; ++k) {
            vals.push_back(mpoly_eval(xcoeffs[k], assign));
            if (k >= 1 && !vals.back().is_zero_elem()) nonconstant = true;
        }
        if (nonconstant) {
            for (long m = -m_range; m <= m_range; ++m) {
                if (found.count(m)) continue;
                NFElem x = mu_pow[m + m_range];
                NFElem acc = NFElem::zero(K);
                NFElem xp = NFElem::one(K);
                for (size_t k = 0; k <= T; ++k) {
                    acc = acc + vals[k] * xp;
                    xp = xp * x;
                }
                if (acc.is_zero_elem()) found.emplace(m, a);
            }
        }
        // Lexicographic odometer: the last coordinate varies fastest, so the
        // first tuple recorded per m is the lex-least one.
        size_t i = d;
        while (i > 0 && a[i - 1] == box) { a[i - 1] = -box; --i; }
        if (i == 0) break;
        ++a[i - 1];
    }

    MReport rep;
    rep.m_range = m_range;
    rep.exponent_box = box;
    for (auto &[m, e] : found) rep.solutions.emplace_back(m, e);
    for (size_t i = 1; i < rep.solutions.size(); ++i) {
        std::vector<long> diff;
        diff.push_back(rep.solutions[i].first - rep.solutions[i - 1].first);
        for (size_t j = 0; j < d; ++j)
            diff.push_back(rep.solutions[i].second[j] - rep.solutions[i - 1].second[j]);
        rep.difference_analysis.push_back(std::move(diff));
    }
    return rep;
}

} // namespace bglab

#endif
