#ifndef BGLAB_WORDS_HPP
#define BGLAB_WORDS_HPP

#include <random>

#include "bglab/nfmatrix.hpp"

namespace bglab {

// Word in the generators, kept freely reduced: no adjacent letters with the
// same index and cancelling exponents.
struct GroupWord {
    struct Letter {
        int gen = 0; // 0-based generator index
        int exp = 1; // +1 or -1
        bool operator==(const Letter &o) const { return gen == o.gen && exp == o.exp; }
    };
    std::vector<Letter> letters;

    bool empty() const { return letters.empty(); }
    bool operator==(const GroupWord &o) const { return letters == o.letters; }

    void push(int gen, int exp) {
        if (!letters.empty() && letters.back().gen == gen && letters.back().exp == -exp)
            letters.pop_back();
        else
            letters.push_back({gen, exp});
    }

    GroupWord inverse() const {
        GroupWord w;
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.push(it->gen, -it->exp);
        return w;
    }

    GroupWord concat(const GroupWord &o) const {
        GroupWord w = *this;
        for (const auto &l : o.letters) w.push(l.gen, l.exp);
        return w;
    }

    GroupWord pow(long e) const {
        GroupWord base = e < 0 ? inverse() : *this;
        long k = e < 0 ? -e : e;
        GroupWord w;
        for (long i = 0; i < k; ++i) w = w.concat(base);
        return w;
    }
};

inline NFMatrix eval_word(const GroupWord &w, const std::vector<NFMatrix> &gens,
                          const std::vector<NFMatrix> &inverses) {
    if (gens.empty()) throw err_dimension_mismatch("no generators");
    NFMatrix acc = NFMatrix::identity(gens[0].field(), gens[0].dim());
    for (const auto &l : w.letters) {
        if (l.gen < 0 || l.gen >= static_cast<int>(gens.size()))
            throw err_dimension_mismatch("letter index out of range");
        acc = acc * (l.exp > 0 ? gens[l.gen] : inverses[l.gen]);
    }
    return acc;
}

inline std::vector<NFMatrix> invert_all(const std::vector<NFMatrix> &gens) {
    std::vector<NFMatrix> out;
    out.reserve(gens.size());
    for (const auto &g : gens) out.push_back(nf_inverse(g));
    return out;
}

inline GroupWord random_word(std::mt19937_64 &rng, int num_gens, int max_len) {
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<int> gen_dist(0, num_gens - 1);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    GroupWord w;
    int len = len_dist(rng);
    for (int i = 0; i < len; ++i) w.push(gen_dist(rng), sign_dist(rng) ? 1 : -1);
    return w;
}

} // namespace bglab

#endif
