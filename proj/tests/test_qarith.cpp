#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace bglab;
using namespace bglab::testing;

TEST_CASE("rationals are canonical and round-trip as p/q strings") {
    CHECK(rat_to_string(q(6, 4)) == "3/2");
    CHECK(rat_to_string(q(-6, 4)) == "-3/2");
    CHECK(rat_to_string(q(5)) == "5");
    CHECK(rat_from_string("3/2") == q(3, 2));
    CHECK(rat_from_string("-7") == q(-7));
    CHECK(rat_from_string("0") == Rat(0));
    CHECK_THROWS_AS(rat_from_string("1/0"), Error);
    CHECK_THROWS_AS(rat_from_string("abc"), Error);

    Rat r = q(6, 4);
    CHECK(r.get_den() == 2); // gcd stripped, denominator positive
    CHECK(rat_pow(q(2), -3) == q(1, 8));
}

TEST_CASE("poly_gcd matches hand-computed cases") {
    // gcd(t^2-1, t-1) = t-1
    CHECK(poly_gcd(poly({-1, 0, 1}), poly({-1, 1})) == poly({-1, 1}));
    // gcd(t^2+1, t-1) = 1
    CHECK(poly_gcd(poly({1, 0, 1}), poly({-1, 1})) == poly({1}));
    // gcd((t-2)^2(t-3), (t-2)(t-5)) = t-2; both sides expanded by hand:
    // (t-2)^2(t-3) = t^3 - 7t^2 + 16t - 12, (t-2)(t-5) = t^2 - 7t + 10
    CHECK(poly_gcd(poly({-12, 16, -7, 1}), poly({10, -7, 1})) == poly({-2, 1}));
    // gcd with zero returns the other input made monic
    CHECK(poly_gcd(poly({4, 2}), UPoly<Rat>{}) == poly({2, 1}));
    CHECK(poly_gcd(UPoly<Rat>{}, UPoly<Rat>{}).is_zero_poly());
}

TEST_CASE("poly_gcd divides both inputs and is divided by common divisors") {
    std::mt19937_64 rng(2024);
    int nontrivial = 0;
    for (int iter = 0; iter < 60; ++iter) {
        UPoly<Rat> c = random_poly(rng, 2);
        UPoly<Rat> a = random_poly(rng, 3);
        UPoly<Rat> b = random_poly(rng, 3);
        if (c.is_zero_poly() || a.is_zero_poly() || b.is_zero_poly()) continue;
        UPoly<Rat> f = c * a, g = c * b;
        UPoly<Rat> d = poly_gcd(f, g);
        // divides both exactly
        CHECK(upoly_divmod(f, d).second.is_zero_poly());
        CHECK(upoly_divmod(g, d).second.is_zero_poly());
        // the planted common divisor divides the gcd
        CHECK(upoly_divmod(d, upoly_make_monic(c)).second.is_zero_poly());
        if (d.degree() > 0) ++nontrivial;
    }
    CHECK(nontrivial > 10);
}

TEST_CASE("squarefree_part collapses multiplicities") {
    CHECK(squarefree_part(poly({1, -2, 1})) == poly({-1, 1}));   // (t-1)^2 -> t-1
    CHECK(squarefree_part(poly({1, 0, 1})) == poly({1, 0, 1}));  // already squarefree
    // (t-2)^3(t-3) = t^4 - 9t^3 + 30t^2 - 44t + 24 -> (t-2)(t-3) = t^2-5t+6
    CHECK(squarefree_part(poly({24, -44, 30, -9, 1})) == poly({6, -5, 1}));
    CHECK_THROWS_AS(squarefree_part(UPoly<Rat>{}), Error);
}

TEST_CASE("squarefree_part is idempotent on random inputs") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 50; ++iter) {
        UPoly<Rat> f = random_poly(rng, 6);
        if (f.is_zero_poly()) continue;
        UPoly<Rat> s = squarefree_part(f);
        CHECK(squarefree_part(s) == s);
    }
}

TEST_CASE("nf_new validates the minimal polynomial") {
    CHECK(nf_new(poly({-1, 1})).degree() == 1);            // Q
    CHECK(nf_new(poly({1, 0, 1})).degree() == 2);          // Q(i)
    CHECK_THROWS_AS(nf_new(poly({-1, 0, 1})), Error);      // t^2-1: rational roots
    CHECK_THROWS_AS(nf_new(poly({1, -2, 1})), Error);      // (t-1)^2: not squarefree
    CHECK_THROWS_AS(nf_new(poly({1, 0, 2})), Error);       // not monic
    CHECK_THROWS_AS(nf_new(poly({5})), Error);             // degree 0

    // degree <= 3 without rational roots is verified irreducible
    CHECK(nf_new(poly({-1, -1, 0, 1})).irreducibility_verified());
    // degree 4 is asserted only
    CHECK_FALSE(nf_new(poly({1, 0, -1, 0, 1})).irreducibility_verified());
}

TEST_CASE("nf_arith matches the worked examples") {
    NumberField Qi = nf_new(poly({1, 0, 1}));
    NFElem i = NFElem::gen(Qi);
    CHECK(nf_arith(i, i, NFOp::mul) == e(Qi, -1));

    NumberField Q = nf_rationals();
    CHECK(nf_arith(NFElem::from_rat(Q, q(2, 3)), NFElem::from_rat(Q, q(1, 6)), NFOp::add) ==
          NFElem::from_rat(Q, q(5, 6)));

    NumberField F = nf_new(poly({1, -1, 1})); // theta^2 = theta - 1
    NFElem th = NFElem::gen(F);
    CHECK(th * (NFElem::one(F) - th) == NFElem::one(F));

    CHECK_THROWS_AS(nf_arith(th, NFElem::zero(F), NFOp::div), Error);
    CHECK_THROWS_AS(nf_arith(NFElem::one(Q), NFElem::one(F), NFOp::add), Error);
}

TEST_CASE("field arithmetic: (a*b)*b^-1 == a in a degree-3 field") {
    NumberField K = nf_new(poly({-1, -1, 0, 1})); // t^3 - t - 1
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> dist(-9, 9);
    int done = 0;
    while (done < 200) {
        std::vector<Rat> ac, bc;
        for (int i = 0; i < 3; ++i) ac.push_back(q(dist(rng), 1 + std::abs(dist(rng)) % 3));
        for (int i = 0; i < 3; ++i) bc.push_back(q(dist(rng), 1 + std::abs(dist(rng)) % 3));
        NFElem a(K, ac), b(K, bc);
        if (b.is_zero_elem()) continue;
        CHECK((a * b) / b == a);
        ++done;
    }
}

TEST_CASE("norms multiply and detect non-units") {
    NumberField K = nf_new(poly({-1, -1, 0, 1}));
    NFElem th = NFElem::gen(K);
    CHECK(nf_norm(th) == Rat(1)); // t^3 - t - 1 has constant term -1
    NFElem a = th + e(K, 2);
    CHECK(nf_norm(a * th) == nf_norm(a) * nf_norm(th));
    CHECK(nf_norm(e(K, 6)) == Rat(216));
}
