#ifndef BGLAB_HUNT_HPP
#define BGLAB_HUNT_HPP

#include "bglab/multrel.hpp"
#include "bglab/words.hpp"

namespace bglab {

struct HuntResult {
    std::optional<GroupWord> word;
    std::optional<NFMatrix> element;
    std::optional<IndependenceVerdict> verdict;
    long attempts = 0;
    long skipped_nonsplit = 0;
};

// Random search for a regular semisimple word whose eigenvalue group is
// nontrivial, torsion-free, and multiplicatively independent from the
// opponents' eigenvalue group.  Absence after the budget proves nothing; the
// existence statement behind it is non-constructive.
inline HuntResult generic_hunt(const std::vector<NFMatrix> &gens, const std::vector<NFMatrix> &opponents,
                               long word_budget, unsigned long seed, long box,
                               const std::vector<NFElem> &root_candidates = {}) {
    if (gens.empty()) throw err_dimension_mismatch("no generators");
    for (const auto &g : gens)
        if (nf_det(g).is_zero_elem()) throw err_not_invertible();
    for (const auto &g : opponents)
        if (nf_det(g).is_zero_elem()) throw err_not_invertible();

    MultGroup opp = eigenvalue_group(opponents, root_candidates);
    std::vector<NFMatrix> inverses = invert_all(gens);
    std::mt19937_64 rng(seed);

    HuntResult res;
    for (long attempt = 0; attempt < word_budget; ++attempt) {
        ++res.attempts;
        GroupWord w = random_word(rng, static_cast<int>(gens.size()), 4);
        if (w.empty()) continue;
        NFMatrix el = eval_word(w, gens, inverses);
        if (!upoly_is_squarefree(charpoly(el))) continue; // not regular semisimple
        MultGroup lam;
        try {
            lam = eigenvalue_group({el}, root_candidates);
        } catch (const NotSplitError &) {
            ++res.skipped_nonsplit;
            continue;
        }
        if (!torsion_free_nontrivial(lam)) continue;
        IndependenceVerdict v = groups_multiplicatively_independent(lam, opp, box);
        if (v.independent != Independence::yes) continue;
        res.word = w;
        res.element = el;
        res.verdict = v;
        return res;
    }
    return res;
}

} // namespace bglab

#endif
