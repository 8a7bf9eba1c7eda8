#ifndef BGLAB_TEST_HELPERS_HPP
#define BGLAB_TEST_HELPERS_HPP

#include <random>

#include "bglab/bglab.hpp"

namespace bglab::testing {

inline Rat q(long n, long d = 1) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline Rat rabs(const Rat &x) { return x >= 0 ? x : Rat(-x); }

inline UPoly<Rat> poly(std::initializer_list<long> coeffs) {
    UPoly<Rat> f;
    for (long c : coeffs) f.coeffs.push_back(Rat(c));
    f.normalize();
    return f;
}

inline UPoly<Rat> polyq(std::initializer_list<Rat> coeffs) {
    UPoly<Rat> f;
    for (const Rat &c : coeffs) f.coeffs.push_back(c);
    f.normalize();
    return f;
}

inline NFElem e(const NumberField &K, long n, long d = 1) { return NFElem::from_rat(K, q(n, d)); }

inline NFMatrix mat(const NumberField &K, int n, std::initializer_list<long> entries) {
    std::vector<NFElem> v;
    for (long x : entries) v.push_back(e(K, x));
    return NFMatrix(K, n, std::move(v));
}

inline NFMatrix matq(const NumberField &K, int n, std::initializer_list<Rat> entries) {
    std::vector<NFElem> v;
    for (const Rat &x : entries) v.push_back(NFElem::from_rat(K, x));
    return NFMatrix(K, n, std::move(v));
}

// Random invertible matrix with small integer entries; triangular keeps the
// diagonal nonzero.
inline NFMatrix random_invertible(const NumberField &K, int n, std::mt19937_64 &rng, bool triangular,
                                  long lo = -5, long hi = 5) {
    std::uniform_int_distribution<long> dist(lo, hi);
    for (;;) {
        std::vector<NFElem> v;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long x = dist(rng);
                if (triangular && j < i) x = 0;
                if (triangular && j == i && x == 0) x = 1;
                v.push_back(e(K, x));
            }
        NFMatrix m(K, n, std::move(v));
        if (!nf_det(m).is_zero_elem()) return m;
    }
}

inline UPoly<Rat> random_poly(std::mt19937_64 &rng, int max_deg, long coeff_bound = 5) {
    std::uniform_int_distribution<int> deg_dist(0, max_deg);
    std::uniform_int_distribution<long> c_dist(-coeff_bound, coeff_bound);
    int d = deg_dist(rng);
    UPoly<Rat> f;
    for (int i = 0; i <= d; ++i) f.coeffs.push_back(Rat(c_dist(rng)));
    f.normalize();
    return f;
}

} // namespace bglab::testing

#endif
