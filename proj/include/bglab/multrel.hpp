#ifndef BGLAB_MULTREL_HPP
#define BGLAB_MULTREL_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "bglab/embeddings.hpp"
#include "bglab/intlattice.hpp"
#include "bglab/nfmatrix.hpp"

namespace bglab {

// Finitely generated subgroup of K^x given by its generator list.
struct MultGroup {
    NumberField field;
    std::vector<NFElem> generators;
};

inline MultGroup make_mult_group(const NumberField &field, std::vector<NFElem> gens) {
    std::vector<NFElem> out;
    for (const auto &g : gens) {
        if (!g.field().same_as(field)) throw err_field_mismatch("generator in a different field");
        if (g.is_zero_elem()) throw err_zero_element("0 cannot generate a multiplicative group");
        if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
    return MultGroup{field, std::move(out)};
}

// Lambda(gamma_1) ... Lambda(gamma_r): all eigenvalues, canonicalized by
// dropping 1 (unipotent factors contribute nothing) and exact duplicates.
inline MultGroup eigenvalue_group(const std::vector<NFMatrix> &matrices,
                                  const std::vector<NFElem> &root_candidates = {}) {
    if (matrices.empty()) throw err_dimension_mismatch("eigenvalue_group of empty list");
    const NumberField &K = matrices.front().field();
    std::vector<NFElem> gens;
    for (const auto &m : matrices) {
        if (!m.field().same_as(K)) throw err_field_mismatch();
        EigenData ed = eigenvalues_in_field(m, root_candidates);
        for (const auto &l : ed.eigenvalues) {
            if (is_one(l)) continue;
            if (std::find(gens.begin(), gens.end(), l) == gens.end()) gens.push_back(l);
        }
    }
    return MultGroup{K, std::move(gens)};
}

// Exact and complete: an order-m root of unity in K forces phi(m) <= [K:Q],
// so only finitely many m need testing.  Returns the least order, or absence.
inline std::optional<long> is_root_of_unity(const NFElem &lambda) {
    if (lambda.is_zero_elem()) throw err_zero_element();
    const long d = lambda.field().degree();
    const long limit = 2 * d * d + 1; // phi(m) >= sqrt(m/2)
    std::vector<long> phi(static_cast<size_t>(limit) + 1);
    for (long i = 0; i <= limit; ++i) phi[i] = i;
    for (long p = 2; p <= limit; ++p) {
        if (phi[p] != p) continue; // not prime
        for (long q = p; q <= limit; q += p) phi[q] -= phi[q] / p;
    }
    NFElem pow = lambda;
    NFElem one = NFElem::one(lambda.field());
    for (long m = 1; m <= limit; ++m) {
        if (phi[m] <= d && pow == one) return m;
        if (m < limit) pow = pow * lambda;
    }
    return std::nullopt;
}

enum class LatticeStatus { verified_within_box, lll_proposed_and_verified };

inline const char *lattice_status_name(LatticeStatus s) {
    return s == LatticeStatus::verified_within_box ? "verified-within-box" : "lll-proposed-and-verified";
}

// Integer relation lattice of the generators: every basis vector e satisfies
// prod g_i^{e_i} = 1, verified by exact field arithmetic.  Basis in row HNF.
struct RelationLattice {
    int num_generators = 0;
    IntMat basis;
    long search_box = 0;
    LatticeStatus status = LatticeStatus::verified_within_box;
};

namespace detail {

inline bool verify_relation(const std::vector<NFElem> &gens, const IntVec &e) {
    if (gens.empty()) return false;
    // Exponents beyond this are never worth confirming by exact powering.
    const Int cap(1000000);
    for (const Int &x : e)
        if (abs(x) > cap) return false;
    NFElem acc = NFElem::one(gens[0].field());
    for (size_t j = 0; j < gens.size(); ++j) {
        if (e[j] == 0) continue;
        acc = acc * gens[j].pow(e[j].get_si());
    }
    return is_one(acc);
}

// All e with ||e||_inf <= box and prod g^e = 1, by DFS over shared partial
// products.  node_budget caps the tree size; returns false when exceeded.
inline bool sweep_box_relations(const std::vector<NFElem> &gens, long box, long node_budget,
                                IntMat &out) {
    const size_t k = gens.size();
    std::vector<std::vector<NFElem>> pows(k);
    for (size_t j = 0; j < k; ++j) {
        pows[j].reserve(2 * box + 1);
        NFElem inv = gens[j].inverse();
        NFElem cur = inv.pow(box);
        for (long e = -box; e <= box; ++e) {
            pows[j].push_back(cur);
            cur = cur * gens[j];
        }
    }
    long nodes = 0;
    NFElem one = NFElem::one(gens[0].field());
    std::vector<long> e(k, 0);
    std::function<bool(size_t, const NFElem &)> rec = [&](size_t depth, const NFElem &acc) -> bool {
        if (depth == k) {
            if (acc == one) {
                IntVec v(k);
                for (size_t j = 0; j < k; ++j) v[j] = e[j];
                out.push_back(std::move(v));
            }
            return true;
        }
        for (long x = -box; x <= box; ++x) {
            if (++nodes > node_budget) return false;
            e[depth] = x;
            if (!rec(depth + 1, acc * pows[depth][x + box])) return false;
        }
        return true;
    };
    return rec(0, one);
}

inline std::vector<Int> trial_division_primes(const Rat &norm, long bound = 1000000) {
    std::vector<Int> primes;
    for (Int v : {Int(abs(norm.get_num())), Int(norm.get_den())}) {
        for (Int p = 2; p * p <= v && p <= bound; ++p) {
            if (v % p == 0) {
                primes.push_back(p);
                while (v % p == 0) v /= p;
            }
        }
        if (v > 1 && v <= bound) primes.push_back(v);
        // Larger cofactors are ignored: they only weaken the proposals.
    }
    return primes;
}

inline long valuation(Rat x, const Int &p) {
    long v = 0;
    Int num = x.get_num(), den = x.get_den();
    while (num != 0 && num % p == 0) { num /= p; ++v; }
    while (den % p == 0) { den /= p; --v; }
    return v;
}

} // namespace detail

inline RelationLattice relation_lattice(const MultGroup &group, long search_box, int precision_bits,
                                        long sweep_node_budget = 4000000) {
    if (search_box < 1) throw err_internal("relation_lattice: search_box must be >= 1");
    const size_t k = group.generators.size();
    RelationLattice out;
    out.num_generators = static_cast<int>(k);
    out.search_box = search_box;
    if (k == 0) return out;

    IntMat found;

    // Stage 1: propose relations by lattice reduction on archimedean logs and
    // prime valuations of the norms, then keep only exactly verified ones.
    {
        auto boxes = embeddings(group.field, std::max(precision_bits, 16));
        std::set<Int> prime_set;
        std::vector<Rat> norms;
        for (const auto &g : group.generators) {
            Rat n = nf_norm(g);
            norms.push_back(n);
            for (const auto &p : detail::trial_division_primes(n)) prime_set.insert(p);
        }
        std::vector<Int> primes(prime_set.begin(), prime_set.end());

        const Rat scale = Rat(int_pow(2, static_cast<unsigned>(std::min(precision_bits, 48))));
        const Int val_scale = int_pow(2, static_cast<unsigned>(std::min(precision_bits, 48)) + 8);
        IntMat rows(k);
        for (size_t j = 0; j < k; ++j) {
            IntVec row;
            for (size_t c = 0; c < k; ++c) row.push_back(Int(c == j ? 1 : 0));
            for (const auto &box : boxes) {
                double lv = log_abs_at_embedding(group.generators[j], box);
                row.push_back(rat_round(Rat(lv) * scale));
            }
            for (const auto &p : primes) row.push_back(val_scale * Int(detail::valuation(norms[j], p)));
            rows[j] = std::move(row);
        }
        IntMat reduced = lll_reduce(rows);
        // A genuine relation leaves only rounding residue outside the
        // exponent block; rows still carrying scaled columns are not
        // proposals, just long basis vectors.
        const Int exp_cap(1 << 20);
        const Int residue_cap = int_pow(2, static_cast<unsigned>(std::min(precision_bits, 48) / 2));
        for (const auto &r : reduced) {
            IntVec e(r.begin(), r.begin() + k);
            if (intvec_is_zero(e)) continue;
            bool small = true;
            for (size_t c = 0; c < k && small; ++c)
                if (abs(r[c]) > exp_cap) small = false;
            for (size_t c = k; c < r.size() && small; ++c)
                if (abs(r[c]) > residue_cap) small = false;
            if (!small) continue;
            if (detail::verify_relation(group.generators, e)) found.push_back(e);
        }
        out.status = LatticeStatus::lll_proposed_and_verified;
    }

    // Stage 2: exhaustive sweep of the exponent box when affordable.
    {
        double tree = 1;
        for (size_t j = 0; j < k; ++j) {
            tree *= 2 * search_box + 1;
            if (tree > 2.0 * sweep_node_budget) break;
        }
        if (tree <= 2.0 * sweep_node_budget) {
            IntMat swept;
            if (detail::sweep_box_relations(group.generators, search_box, sweep_node_budget, swept)) {
                for (auto &e : swept)
                    if (!intvec_is_zero(e)) found.push_back(std::move(e));
                out.status = LatticeStatus::verified_within_box;
            }
        }
    }

    out.basis = hermite_normal_form(std::move(found));
    for (const auto &e : out.basis)
        if (!detail::verify_relation(group.generators, e))
            throw err_internal("relation_lattice: basis vector fails exact verification");
    return out;
}

enum class Independence { yes, no, unknown_within_box };

inline const char *independence_name(Independence v) {
    switch (v) {
        case Independence::yes: return "yes";
        case Independence::no: return "no";
        default: return "unknown-within-box";
    }
}

// Verdict of Definition 3.4 restricted to a single lambda: a witness
// (k, e_1, ..., e_d) with k != 0 certifies lambda^k * prod mu_i^{e_i} = 1.
struct IndependenceVerdict {
    Independence independent = Independence::unknown_within_box;
    std::optional<IntVec> witness;
    RelationLattice lattice;
};

inline IndependenceVerdict is_multiplicatively_independent(const NFElem &lambda, const MultGroup &group,
                                                           long search_box, int precision_bits = 64) {
    if (lambda.is_zero_elem()) throw err_zero_element();
    std::vector<NFElem> combined{lambda};
    combined.insert(combined.end(), group.generators.begin(), group.generators.end());
    MultGroup merged{group.field, std::move(combined)};
    IndependenceVerdict v;
    v.lattice = relation_lattice(merged, search_box, precision_bits);
    for (const auto &row : v.lattice.basis) {
        if (row[0] != 0) {
            v.independent = Independence::no;
            v.witness = row;
            return v;
        }
    }
    v.independent = v.lattice.status == LatticeStatus::verified_within_box
                        ? Independence::yes
                        : Independence::unknown_within_box;
    return v;
}

// Group-against-group variant used by the generic-element hunt:
// Lambda_A intersects Lambda_B trivially iff every lattice basis vector's
// A-part multiplies to 1.  The witness, when present, is the full relation
// vector over the concatenated generators.
inline IndependenceVerdict groups_multiplicatively_independent(const MultGroup &a, const MultGroup &b,
                                                               long search_box, int precision_bits = 64) {
    std::vector<NFElem> combined = a.generators;
    combined.insert(combined.end(), b.generators.begin(), b.generators.end());
    MultGroup merged{a.field, std::move(combined)};
    IndependenceVerdict v;
    v.lattice = relation_lattice(merged, search_box, precision_bits);
    const size_t ka = a.generators.size();
    for (const auto &row : v.lattice.basis) {
        NFElem part = NFElem::one(a.field);
        bool fits = true;
        for (size_t j = 0; j < ka && fits; ++j) {
            if (row[j] == 0) continue;
            if (!row[j].fits_slong_p()) fits = false;
            else part = part * a.generators[j].pow(row[j].get_si());
        }
        if (!fits) continue;
        if (!is_one(part)) {
            v.independent = Independence::no;
            v.witness = row;
            return v;
        }
    }
    v.independent = v.lattice.status == LatticeStatus::verified_within_box
                        ? Independence::yes
                        : Independence::unknown_within_box;
    return v;
}

// Proposition 3.5's side condition: some generator differs from 1, no
// generator is a nontrivial root of unity, and no small box product is.
inline bool torsion_free_nontrivial(const MultGroup &group, long probe_box = 2) {
    bool nontrivial = false;
    for (const auto &g : group.generators)
        if (!is_one(g)) { nontrivial = true; break; }
    if (!nontrivial) return false;
    for (const auto &g : group.generators) {
        if (is_one(g)) continue;
        if (is_root_of_unity(g)) return false;
    }
    const size_t k = group.generators.size();
    double tree = 1;
    for (size_t j = 0; j < k; ++j) tree *= 2 * probe_box + 1;
    if (tree > 300000.0) probe_box = 1;
    std::vector<long> e(k, -probe_box);
    for (;;) {
        NFElem val = NFElem::one(group.field);
        for (size_t j = 0; j < k; ++j)
            if (e[j] != 0) val = val * group.generators[j].pow(e[j]);
        if (!is_one(val) && is_root_of_unity(val)) return false;
        size_t j = 0;
        while (j < k && e[j] == probe_box) { e[j] = -probe_box; ++j; }
        if (j == k) break;
        ++e[j];
    }
    return true;
}

} // namespace bglab

#endif
