#ifndef BGLAB_PIPELINE_HPP
#define BGLAB_PIPELINE_HPP

#include "bglab/membership.hpp"

namespace bglab {

struct TruncationChoice {
    int alpha = 0; // row, 1-based
    int beta = 0;  // column
    int t = 0;     // truncation degree, >= 1
};

struct TruncationTally {
    int alpha = 0, beta = 0, k = 0;
    long nonzero_count = 0; // observations where psi_k does not vanish
};

struct TruncationSelection {
    TruncationChoice choice;
    std::vector<TruncationTally> tallies;
};

// Desk-scale surrogate for the "largest t with J \ Psi_t infinite" rule:
// among all (alpha, beta, k >= 1), first maximize how often psi_k is nonzero
// on the observed assignments, then maximize k, then take the lexicographic
// (alpha, beta).  If every candidate vanishes on every observation the data
// contradicts the nontrivial-unipotent assumption.
inline TruncationSelection select_truncation(
    const std::vector<std::tuple<int, int, MPoly>> &p_list,
    const std::vector<std::vector<NFElem>> &observed) {
    if (observed.empty()) throw err_internal("select_truncation: no observations");
    TruncationSelection sel;
    bool have = false;
    long best_count = -1;
    for (const auto &[alpha, beta, p] : p_list) {
        std::vector<MPoly> psi = z_coefficients(p);
        for (int k = 1; k < static_cast<int>(psi.size()); ++k) {
            long count = 0;
            for (const auto &assign : observed)
                if (!mpoly_eval(psi[k], assign).is_zero_elem()) ++count;
            sel.tallies.push_back({alpha, beta, k, count});
            if (count == 0) continue;
            bool better = false;
            if (count > best_count) better = true;
            else if (count == best_count) {
                if (k > sel.choice.t) better = true;
                else if (k == sel.choice.t &&
                         std::pair(alpha, beta) < std::pair(sel.choice.alpha, sel.choice.beta))
                    better = true;
            }
            if (better) {
                sel.choice = {alpha, beta, k};
                best_count = count;
                have = true;
            }
        }
    }
    if (!have) throw err_lemma_violation();
    return sel;
}

enum class PipelineCase { all_semisimple, one_unipotent, reduced_via_jordan };

inline const char *pipeline_case_name(PipelineCase c) {
    switch (c) {
        case PipelineCase::all_semisimple: return "all-semisimple";
        case PipelineCase::one_unipotent: return "one-unipotent";
        default: return "reduced-via-jordan";
    }
}

enum class Conclusion { consistent_with_finiteness, hypothesis_violated, inconclusive };

inline const char *conclusion_name(Conclusion c) {
    switch (c) {
        case Conclusion::consistent_with_finiteness: return "consistent-with-finiteness";
        case Conclusion::hypothesis_violated: return "hypothesis-violated";
        default: return "inconclusive";
    }
}

// End-to-end certificate.  Everything needed to replay the experiment is
// kept: the inputs, the selected eigenvalue, the relation lattice behind the
// independence verdict, the constructed polynomial and the membership scan.
struct ObstructionCertificate {
    PipelineCase case_kind = PipelineCase::all_semisimple;
    NFElem lambda;
    std::optional<long> torsion;
    IndependenceVerdict independence;
    std::vector<NFElem> lambda_group; // generators of Lambda(gamma_1)...Lambda(gamma_r)
    MPoly constructed_f;
    std::optional<TruncationSelection> truncation;
    JReport j_scan;
    Conclusion conclusion = Conclusion::inconclusive;

    // provenance
    NFMatrix gamma;
    std::vector<NFMatrix> gens;
    std::vector<NFMatrix> extended_gens;            // after the Jordan split, if any
    std::vector<std::vector<NFElem>> gen_eigenvalues; // per extended slot; empty for the unipotent
    int unipotent_slot = 0;                           // 1-based in extended_gens; 0 in Case 1
    long m_range = 0, box = 0;
    int precision_bits = 64;
};

namespace detail {

// Witness exponents for the extended list: the Jordan split duplicates the
// exponent of the replaced generator (gamma_s^a = sigma^a upsilon^a).
inline std::vector<long> extend_exponents(const std::vector<long> &a, PipelineCase kind, int split_at) {
    if (kind != PipelineCase::reduced_via_jordan) return a;
    std::vector<long> out;
    for (size_t i = 0; i < a.size(); ++i) {
        out.push_back(a[i]);
        if (static_cast<int>(i) == split_at) out.push_back(a[i]);
    }
    return out;
}

} // namespace detail

// The Theorem 4.1 experiment: hypothesis checks (lambda not a root of unity,
// multiplicative independence from the generator eigenvalue group), the case
// split on the lone non-semisimple generator, the certificate polynomial of
// the matching case, and the bounded membership scan.
inline ObstructionCertificate theorem41_pipeline(const NFMatrix &gamma, const std::vector<NFMatrix> &gens,
                                                 const std::optional<NFElem> &lambda_hint, long m_range,
                                                 long box, const std::vector<NFElem> &root_candidates = {},
                                                 int precision_bits = 64, int threads = 1) {
    for (const auto &g : gens) check_compatible(gamma, g);
    if (gens.empty()) throw err_dimension_mismatch("no generators");
    if (!is_semisimple(gamma)) throw Error("NotSemisimple", "gamma must be semisimple");

    ObstructionCertificate cert;
    cert.gamma = gamma;
    cert.gens = gens;
    cert.m_range = m_range;
    cert.box = box;
    cert.precision_bits = precision_bits;

    EigenData gamma_eigen = eigenvalues_in_field(gamma, root_candidates); // NotSplit propagates
    if (!gamma_eigen.diagonalizer)
        throw err_internal("pipeline: semisimple split gamma lacks a diagonalizer");

    // Case split: at most one generator may be non-semisimple.
    int bad = -1;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (!is_semisimple(gens[i])) {
            if (bad >= 0) throw err_too_many_exceptions();
            bad = static_cast<int>(i);
        }
    }
    int split_at = -1;
    if (bad < 0) {
        cert.case_kind = PipelineCase::all_semisimple;
        cert.extended_gens = gens;
    } else if (is_unipotent(gens[bad])) {
        cert.case_kind = PipelineCase::one_unipotent;
        cert.extended_gens = gens;
        cert.unipotent_slot = bad + 1;
    } else {
        cert.case_kind = PipelineCase::reduced_via_jordan;
        JordanPair jp = jordan_chevalley(gens[bad]);
        for (size_t i = 0; i < gens.size(); ++i) {
            if (static_cast<int>(i) == bad) {
                cert.extended_gens.push_back(jp.semisimple_part);
                cert.extended_gens.push_back(jp.unipotent_part);
            } else {
                cert.extended_gens.push_back(gens[i]);
            }
        }
        cert.unipotent_slot = bad + 2;
        split_at = bad;
    }

    // Select lambda: the hint, or the first eigenvalue beyond the roots of unity.
    if (lambda_hint) {
        bool found = false;
        for (const auto &l : gamma_eigen.eigenvalues)
            if (l == *lambda_hint) { found = true; break; }
        if (!found) throw err_no_suitable_eigenvalue("hint is not an eigenvalue of gamma");
        cert.lambda = *lambda_hint;
    } else {
        bool found = false;
        for (const auto &l : gamma_eigen.eigenvalues) {
            if (l.is_zero_elem()) continue;
            if (!is_root_of_unity(l)) {
                cert.lambda = l;
                found = true;
                break;
            }
        }
        if (!found) throw err_no_suitable_eigenvalue();
    }
    cert.torsion = is_root_of_unity(cert.lambda);

    // The construction assumes lambda sits in the (1,1) slot of the
    // diagonalization; permute the eigenbasis so it does.
    {
        std::vector<NFElem> &evs = gamma_eigen.eigenvalues;
        NFMatrix &g0 = *gamma_eigen.diagonalizer;
        int idx = -1;
        for (size_t i = 0; i < evs.size(); ++i)
            if (evs[i] == cert.lambda) { idx = static_cast<int>(i); break; }
        if (idx < 0) throw err_internal("pipeline: lambda lost during selection");
        if (idx != 0) {
            std::swap(evs[0], evs[static_cast<size_t>(idx)]);
            for (int row = 0; row < gamma.dim(); ++row) {
                NFElem tmp = g0.at(row, 0);
                g0.at(row, 0) = g0.at(row, idx);
                g0.at(row, idx) = tmp;
            }
        }
    }

    // Lambda(gamma_1) ... Lambda(gamma_r); unipotent slots only contribute 1.
    MultGroup lam = eigenvalue_group(cert.extended_gens, root_candidates); // NotSplit propagates
    cert.lambda_group = lam.generators;
    cert.independence = is_multiplicatively_independent(cert.lambda, lam, box, precision_bits);

    cert.j_scan = compute_J(gamma, gens, m_range, box, threads);

    // Eigen data for every semisimple extended slot, aligned with its
    // diagonalizer columns.
    const NFMatrix &g = *gamma_eigen.diagonalizer;
    std::vector<NFMatrix> conjugators;
    cert.gen_eigenvalues.assign(cert.extended_gens.size(), {});
    for (size_t i = 0; i < cert.extended_gens.size(); ++i) {
        if (static_cast<int>(i) + 1 == cert.unipotent_slot) continue;
        EigenData ed = eigenvalues_in_field(cert.extended_gens[i], root_candidates);
        if (!ed.diagonalizer) throw err_internal("pipeline: semisimple generator lacks a diagonalizer");
        cert.gen_eigenvalues[i] = ed.eigenvalues;
        conjugators.push_back(*ed.diagonalizer);
    }

    if (cert.case_kind == PipelineCase::all_semisimple) {
        MPoly p = build_case1_poly(g, conjugators, {1, 1});
        std::vector<std::string> vars{"x"};
        vars.insert(vars.end(), p.vars.begin(), p.vars.end());
        cert.constructed_f = mpoly_var(p.field, vars, "x") - extend_vars(p, vars);
    } else {
        const int s = cert.unipotent_slot;
        PolyMatrix A = unipotent_power_matrix(cert.extended_gens[s - 1]);
        MPoly p11 = build_case2_poly(g, conjugators, A, s, {1, 1});

        const int n = gamma.dim();
        std::vector<std::tuple<int, int, MPoly>> offdiag;
        for (int alpha = 1; alpha <= n; ++alpha)
            for (int beta = 1; beta <= n; ++beta)
                if (alpha != beta)
                    offdiag.emplace_back(alpha, beta, build_case2_poly(g, conjugators, A, s, {alpha, beta}));

        // Observed variable assignments from the membership witnesses:
        // x_{ij} -> lambda_{ij}^{a_i(m)}.  The variable list is slot-major,
        // skipping slot s, with z last; rebuild (slot, j) in that order.
        const auto &vars = std::get<2>(offdiag.front()).vars;
        std::vector<std::pair<int, int>> slot_of_var;
        for (size_t i = 1; i <= cert.extended_gens.size(); ++i) {
            if (static_cast<int>(i) == s) continue;
            for (int j = 1; j <= n; ++j) slot_of_var.emplace_back(static_cast<int>(i), j);
        }
        if (slot_of_var.size() + 1 != vars.size())
            throw err_internal("pipeline: variable bookkeeping mismatch");
        std::vector<std::vector<NFElem>> observed;
        for (const auto &w : cert.j_scan.witnesses) {
            std::vector<long> ext = detail::extend_exponents(w.exponents, cert.case_kind, split_at);
            std::vector<NFElem> assign;
            assign.reserve(vars.size());
            for (const auto &[slot, j] : slot_of_var)
                assign.push_back(cert.gen_eigenvalues[slot - 1][j - 1].pow(ext[slot - 1]));
            assign.push_back(NFElem::one(gamma.field())); // z never appears in psi_k
            observed.push_back(std::move(assign));
        }

        cert.truncation = select_truncation(offdiag, observed); // LemmaViolation propagates
        const auto &tc = cert.truncation->choice;
        MPoly p_ab = [&]() -> const MPoly & {
            for (const auto &[a, b, p] : offdiag)
                if (a == tc.alpha && b == tc.beta) return p;
            throw err_internal("pipeline: selected entry missing");
        }();
        MPoly p_tilde = truncate_z(p_ab, tc.t);

        std::vector<std::string> qvars{"x"};
        qvars.insert(qvars.end(), p11.vars.begin(), p11.vars.end());
        MPoly q = mpoly_var(p11.field, qvars, "x") - extend_vars(p11, qvars);
        if (deg_z(q) >= 1) {
            cert.constructed_f = resultant_z(q, p_tilde);
        } else {
            // p_11 does not involve z, so lambda^m = p_11(...) is already a
            // z-free certificate; elimination would be degenerate.
            cert.constructed_f = drop_var(q, "z");
        }
    }

    // Conclusion taxonomy: honest about what a bounded scan can certify.
    bool torsion_bad = cert.torsion.has_value();
    bool strictly_inside = true;
    for (const auto &w : cert.j_scan.witnesses)
        if (w.m <= -m_range || w.m >= m_range) strictly_inside = false;
    if (torsion_bad || cert.independence.independent == Independence::no)
        cert.conclusion = Conclusion::hypothesis_violated;
    else if (cert.independence.independent == Independence::yes && strictly_inside)
        cert.conclusion = Conclusion::consistent_with_finiteness;
    else
        cert.conclusion = Conclusion::inconclusive;
    return cert;
}

} // namespace bglab

#endif
