#ifndef BGLAB_SOLVABILITY_HPP
#define BGLAB_SOLVABILITY_HPP

#include <memory>

#include "bglab/words.hpp"

namespace bglab {

// Construction tree of an iterated commutator over ell-th powers of words.
// Leaves are w^ell with w a word in the generators; an inner node is the
// commutator [left, right].  Replaying the tree reproduces the element.
struct CommTree {
    bool is_leaf = true;
    GroupWord base;   // leaf: the sampled word (before the ell-th power)
    long ell = 1;     // leaf: power applied to base
    std::shared_ptr<CommTree> left, right;

    GroupWord expand() const {
        if (is_leaf) return base.pow(ell);
        GroupWord l = left->expand(), r = right->expand();
        return l.inverse().concat(r.inverse()).concat(l).concat(r);
    }
};

// A nontrivial element of D^depth(Gamma^(ell)), by construction.  Its
// existence certifies that the group is not virtually solvable at the
// matching parameters; absence proves nothing.
struct SolvabilityWitness {
    GroupWord word; // expanded commutator expression over the generators
    int depth = 0;
    long ell = 1;
    NFMatrix element;
    std::shared_ptr<CommTree> tree;
};

namespace detail {

inline std::shared_ptr<CommTree> random_comm_tree(std::mt19937_64 &rng, int num_gens, long ell,
                                                  int depth) {
    auto node = std::make_shared<CommTree>();
    if (depth == 0) {
        node->is_leaf = true;
        node->base = random_word(rng, num_gens, 3);
        node->ell = ell;
        return node;
    }
    node->is_leaf = false;
    node->left = random_comm_tree(rng, num_gens, ell, depth - 1);
    node->right = random_comm_tree(rng, num_gens, ell, depth - 1);
    return node;
}

inline NFMatrix eval_comm_tree(const CommTree &t, const std::vector<NFMatrix> &gens,
                               const std::vector<NFMatrix> &inverses) {
    if (t.is_leaf) return nf_pow(eval_word(t.base, gens, inverses), t.ell);
    NFMatrix a = eval_comm_tree(*t.left, gens, inverses);
    NFMatrix b = eval_comm_tree(*t.right, gens, inverses);
    return nf_inverse(a) * nf_inverse(b) * a * b;
}

} // namespace detail

// Randomized search for a nontrivial depth-fold iterated commutator of
// ell-th powers.  Seeded, so negative results replay.
inline std::optional<SolvabilityWitness> derived_depth_witness(const std::vector<NFMatrix> &gens,
                                                               long ell, int depth, long budget,
                                                               unsigned long seed) {
    if (ell < 1 || depth < 1) throw err_internal("derived_depth_witness: ell and depth must be >= 1");
    if (gens.empty()) return std::nullopt;
    std::vector<NFMatrix> inverses = invert_all(gens);
    std::mt19937_64 rng(seed);
    NFMatrix id = NFMatrix::identity(gens[0].field(), gens[0].dim());
    for (long attempt = 0; attempt < budget; ++attempt) {
        auto tree = detail::random_comm_tree(rng, static_cast<int>(gens.size()), ell, depth);
        NFMatrix el = detail::eval_comm_tree(*tree, gens, inverses);
        if (el == id) continue;
        SolvabilityWitness w;
        w.word = tree->expand();
        w.depth = depth;
        w.ell = ell;
        w.element = el;
        w.tree = tree;
        if (eval_word(w.word, gens, inverses) != el)
            throw err_internal("derived_depth_witness: expanded word does not replay");
        return w;
    }
    return std::nullopt;
}

} // namespace bglab

#endif
