#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace bglab;
using namespace bglab::testing;

namespace {
const NumberField Q = nf_rationals();

UPoly<NFElem> lift(const NumberField &K, const UPoly<Rat> &f) {
    UPoly<NFElem> out;
    for (const auto &c : f.coeffs) out.coeffs.push_back(NFElem::from_rat(K, c));
    out.normalize();
    return out;
}
} // namespace

TEST_CASE("charpoly on the worked examples") {
    CHECK(charpoly(mat(Q, 2, {2, 0, 0, 3})) == lift(Q, poly({6, -5, 1})));
    CHECK(charpoly(mat(Q, 2, {2, 1, 0, 2})) == lift(Q, poly({4, -4, 1})));
    CHECK(charpoly(mat(Q, 2, {0, -1, 1, 0})) == lift(Q, poly({1, 0, 1})));
}

TEST_CASE("Cayley-Hamilton on random 3x3 matrices") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(-4, 4);
    NFMatrix zero = scalar_mul(NFElem::zero(Q), NFMatrix::identity(Q, 3));
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<NFElem> v;
        for (int i = 0; i < 9; ++i) v.push_back(e(Q, dist(rng), 1 + (iter % 2)));
        NFMatrix m(Q, 3, std::move(v));
        CHECK(upoly_eval_matrix(charpoly(m), m) == zero);
        CHECK(upoly_divmod(charpoly(m), minpoly(m)).second.is_zero_poly());
    }
}

TEST_CASE("minpoly on the worked examples") {
    CHECK(minpoly(mat(Q, 3, {2, 0, 0, 0, 2, 0, 0, 0, 3})) == lift(Q, poly({6, -5, 1})));
    CHECK(minpoly(NFMatrix::identity(Q, 4)) == lift(Q, poly({-1, 1})));
    CHECK(minpoly(mat(Q, 2, {2, 1, 0, 2})) == lift(Q, poly({4, -4, 1})));
}

TEST_CASE("is_semisimple via squarefree minimal polynomial") {
    CHECK_FALSE(is_semisimple(mat(Q, 2, {1, 1, 0, 1})));
    CHECK(is_semisimple(mat(Q, 2, {2, 0, 0, 3})));
    // t^2+1 is squarefree even though it does not split over Q
    CHECK(is_semisimple(mat(Q, 2, {0, -1, 1, 0})));
}

TEST_CASE("jordan_chevalley on the worked examples") {
    NFMatrix semi = mat(Q, 2, {2, 0, 0, 3});
    auto [s1, u1] = jordan_chevalley(semi);
    CHECK(s1 == semi);
    CHECK(u1 == NFMatrix::identity(Q, 2));

    auto [s2, u2] = jordan_chevalley(mat(Q, 2, {2, 1, 0, 2}));
    CHECK(s2 == mat(Q, 2, {2, 0, 0, 2}));
    CHECK(u2 == matq(Q, 2, {q(1), q(1, 2), q(0), q(1)}));

    NFMatrix uni = mat(Q, 2, {1, 1, 0, 1});
    auto [s3, u3] = jordan_chevalley(uni);
    CHECK(s3 == NFMatrix::identity(Q, 2));
    CHECK(u3 == uni);

    CHECK_THROWS_AS(jordan_chevalley(mat(Q, 2, {1, 0, 0, 0})), Error);
}

TEST_CASE("jordan_chevalley invariants on random matrices") {
    std::mt19937_64 rng(123);
    NFMatrix id = NFMatrix::identity(Q, 3);
    auto check_one = [&](const NFMatrix &m) {
        auto [sigma, upsilon] = jordan_chevalley(m);
        CHECK(is_semisimple(sigma));
        CHECK(nf_pow_nilpotent_zero(upsilon - id));
        CHECK(sigma * upsilon == m);
        CHECK(upsilon * sigma == m);
        // determinism
        auto [sigma2, upsilon2] = jordan_chevalley(m);
        CHECK(sigma == sigma2);
        CHECK(upsilon == upsilon2);
        // sigma is a polynomial in m, so it commutes with everything m
        // commutes with; spot-check against m itself and m^2.
        CHECK(sigma * m == m * sigma);
        CHECK(sigma * (m * m) == (m * m) * sigma);
    };
    for (int iter = 0; iter < 200; ++iter) check_one(random_invertible(Q, 3, rng, true));
    for (int iter = 0; iter < 100; ++iter) check_one(random_invertible(Q, 3, rng, false));
}

TEST_CASE("eigenvalues_in_field on the worked examples") {
    EigenData d1 = eigenvalues_in_field(mat(Q, 2, {2, 0, 0, 3}));
    REQUIRE(d1.eigenvalues.size() == 2);
    CHECK(d1.eigenvalues[0] == e(Q, 2));
    CHECK(d1.eigenvalues[1] == e(Q, 3));
    REQUIRE(d1.diagonalizer);
    CHECK(*d1.diagonalizer == NFMatrix::identity(Q, 2));

    CHECK_THROWS_AS(eigenvalues_in_field(mat(Q, 2, {0, -1, 1, 0})), NotSplitError);
    try {
        eigenvalues_in_field(mat(Q, 2, {0, -1, 1, 0}));
    } catch (const NotSplitError &err) {
        CHECK(err.factor().degree() == 2); // the unsplit factor t^2+1 rides along
    }

    NumberField Qi = nf_new(poly({1, 0, 1}));
    NFMatrix rot(Qi, 2,
                 {NFElem::zero(Qi), NFElem::zero(Qi) - NFElem::one(Qi), NFElem::one(Qi), NFElem::zero(Qi)});
    EigenData d2 = eigenvalues_in_field(rot);
    REQUIRE(d2.eigenvalues.size() == 2);
    NFElem i = NFElem::gen(Qi);
    CHECK(((d2.eigenvalues[0] == i && d2.eigenvalues[1] == NFElem::zero(Qi) - i) ||
           (d2.eigenvalues[0] == NFElem::zero(Qi) - i && d2.eigenvalues[1] == i)));
    REQUIRE(d2.diagonalizer);
    // exact diagonalization
    NFMatrix g = *d2.diagonalizer;
    NFMatrix diag = nf_inverse(g) * rot * g;
    CHECK(diag.at(0, 0) == d2.eigenvalues[0]);
    CHECK(diag.at(1, 1) == d2.eigenvalues[1]);
    CHECK(diag.at(0, 1).is_zero_elem());
    CHECK(diag.at(1, 0).is_zero_elem());
}

TEST_CASE("eigenvalue product reconstructs the characteristic polynomial") {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 20; ++iter) {
        // random diagonalizable matrix with known rational eigenvalues
        std::uniform_int_distribution<long> dist(-4, 4);
        NFMatrix g = random_invertible(Q, 3, rng, false, -2, 2);
        NFMatrix d = mat(Q, 3, {dist(rng), 0, 0, 0, dist(rng), 0, 0, 0, dist(rng)});
        NFMatrix m = g * d * nf_inverse(g);
        EigenData ed = eigenvalues_in_field(m);
        UPoly<NFElem> prod = upoly_constant(NFElem::one(Q));
        for (const auto &l : ed.eigenvalues) prod = prod * upoly_linear_root(l);
        CHECK(prod == charpoly(m));
    }
}

TEST_CASE("unipotent_power_matrix expands binomially") {
    PolyMatrix a1 = unipotent_power_matrix(NFMatrix::identity(Q, 2));
    CHECK(a1.eval_at(5) == NFMatrix::identity(Q, 2));

    PolyMatrix a2 = unipotent_power_matrix(mat(Q, 2, {1, 1, 0, 1}));
    CHECK(a2.at(0, 1) == lift(Q, poly({0, 1}))); // entry (1,2) is exactly z

    NFMatrix u3 = mat(Q, 3, {1, 1, 0, 0, 1, 1, 0, 0, 1});
    PolyMatrix a3 = unipotent_power_matrix(u3);
    // entry (1,3) is z(z-1)/2
    CHECK(a3.at(0, 2) == lift(Q, polyq({q(0), q(-1, 2), q(1, 2)})));
    CHECK(a3.eval_at(3) == nf_pow(u3, 3));

    CHECK_THROWS_AS(unipotent_power_matrix(mat(Q, 2, {2, 0, 0, 1})), Error);
}

TEST_CASE("A(m1) A(m2) = A(m1+m2): one-parameter group law") {
    NFMatrix u = mat(Q, 3, {1, 2, -1, 0, 1, 3, 0, 0, 1});
    PolyMatrix a = unipotent_power_matrix(u);
    for (long m1 : {-3L, -1L, 0L, 2L, 5L})
        for (long m2 : {-2L, 1L, 4L})
            CHECK(a.eval_at(m1) * a.eval_at(m2) == a.eval_at(m1 + m2));
}
