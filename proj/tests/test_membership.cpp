#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace bglab;
using namespace bglab::testing;

namespace {
const NumberField Q = nf_rationals();

// Naive oracle: full enumeration, no hashing, lex order.
std::vector<MembershipWitness> oracle_J(const NFMatrix &gamma, const std::vector<NFMatrix> &gens,
                                        long m_range, long box) {
    std::vector<MembershipWitness> out;
    const size_t r = gens.size();
    for (long m = -m_range; m <= m_range; ++m) {
        NFMatrix target = nf_pow(gamma, m);
        std::vector<long> a(r, -box);
        bool found = false;
        for (;;) {
            NFMatrix prod = NFMatrix::identity(Q, gamma.dim());
            for (size_t i = 0; i < r; ++i) prod = prod * nf_pow(gens[i], a[i]);
            if (prod == target) {
                out.push_back({m, a});
                found = true;
                break;
            }
            size_t i = r;
            while (i > 0 && a[i - 1] == box) { a[i - 1] = -box; --i; }
            if (i == 0) break;
            ++a[i - 1];
        }
        (void)found;
    }
    return out;
}
} // namespace

TEST_CASE("compute_J on the worked examples") {
    NFMatrix g4 = matq(Q, 2, {q(4), q(0), q(0), q(1, 4)});
    NFMatrix g2 = matq(Q, 2, {q(2), q(0), q(0), q(1, 2)});
    JReport r1 = compute_J(g4, {g2}, 10, 25);
    REQUIRE(r1.witnesses.size() == 21);
    for (const auto &w : r1.witnesses) CHECK(w.exponents[0] == 2 * w.m);

    NFMatrix g5 = matq(Q, 2, {q(5), q(0), q(0), q(1, 5)});
    NFMatrix g3 = matq(Q, 2, {q(3), q(0), q(0), q(1, 3)});
    JReport r2 = compute_J(g5, {g2, g3}, 10, 30);
    REQUIRE(r2.witnesses.size() == 1);
    CHECK(r2.witnesses[0].m == 0);
    CHECK(r2.witnesses[0].exponents == std::vector<long>({0, 0}));

    // m = 0 is always witnessed by the empty word
    JReport r3 = compute_J(mat(Q, 2, {1, 1, 0, 1}), {g2}, 3, 3);
    bool has_zero = false;
    for (const auto &w : r3.witnesses)
        if (w.m == 0) has_zero = true;
    CHECK(has_zero);
}

TEST_CASE("compute_J equals naive enumeration on random instances") {
    std::mt19937_64 rng(606);
    std::uniform_int_distribution<int> rd(1, 2);
    std::uniform_int_distribution<long> box_d(2, 8), range_d(2, 8);
    for (int iter = 0; iter < 30; ++iter) {
        int r = rd(rng);
        NFMatrix gamma = random_invertible(Q, 2, rng, true, -2, 2);
        std::vector<NFMatrix> gens;
        for (int i = 0; i < r; ++i) gens.push_back(random_invertible(Q, 2, rng, true, -2, 2));
        long box = box_d(rng), range = range_d(rng);
        JReport fast = compute_J(gamma, gens, range, box);
        auto slow = oracle_J(gamma, gens, range, box);
        REQUIRE(fast.witnesses.size() == slow.size());
        for (size_t i = 0; i < slow.size(); ++i) {
            CHECK(fast.witnesses[i].m == slow[i].m);
            CHECK(fast.witnesses[i].exponents == slow[i].exponents);
        }
    }
}

TEST_CASE("J is symmetric under m -> -m on diagonal instances") {
    NFMatrix g4 = matq(Q, 2, {q(4), q(0), q(0), q(1, 4)});
    NFMatrix g2 = matq(Q, 2, {q(2), q(0), q(0), q(1, 2)});
    JReport r = compute_J(g4, {g2}, 6, 15);
    for (const auto &w : r.witnesses) {
        bool found = false;
        for (const auto &v : r.witnesses) {
            if (v.m != -w.m) continue;
            bool neg = true;
            for (size_t i = 0; i < v.exponents.size(); ++i)
                if (v.exponents[i] != -w.exponents[i]) neg = false;
            if (neg) found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("threaded scan matches the single-threaded one") {
    NFMatrix g4 = matq(Q, 2, {q(4), q(0), q(0), q(1, 4)});
    NFMatrix g2 = matq(Q, 2, {q(2), q(0), q(0), q(1, 2)});
    JReport a = compute_J(g4, {g2}, 9, 20, 1);
    JReport b = compute_J(g4, {g2}, 9, 20, 4);
    REQUIRE(a.witnesses.size() == b.witnesses.size());
    for (size_t i = 0; i < a.witnesses.size(); ++i) {
        CHECK(a.witnesses[i].m == b.witnesses[i].m);
        CHECK(a.witnesses[i].exponents == b.witnesses[i].exponents);
    }
}

TEST_CASE("laurent_enumerate on the worked examples") {
    std::vector<std::string> v{"x", "x1"};
    MPoly f = mpoly_var(Q, v, "x") - mpoly_var(Q, v, "x1");

    MReport m1 = laurent_enumerate(f, e(Q, 2), {e(Q, 3)}, 50, 50);
    REQUIRE(m1.solutions.size() == 1);
    CHECK(m1.solutions[0].first == 0);
    CHECK(m1.solutions[0].second == std::vector<long>({0}));

    MReport m2 = laurent_enumerate(f, e(Q, 2), {e(Q, 4)}, 6, 6);
    REQUIRE(m2.solutions.size() == 7);
    for (const auto &[m, a] : m2.solutions) {
        CHECK(m % 2 == 0);
        CHECK(a[0] == m / 2);
    }
    // consecutive differences show the single coset translate (2, 1)
    for (const auto &d : m2.difference_analysis) CHECK(d == std::vector<long>({2, 1}));

    std::vector<std::string> vx{"x"};
    MPoly fx = mpoly_var(Q, vx, "x") - mpoly_const(Q, vx, e(Q, 1));
    MReport m3 = laurent_enumerate(fx, e(Q, 1), {}, 5, 5);
    CHECK(m3.solutions.size() == 11); // mu = 1: every m qualifies
    MReport m4 = laurent_enumerate(fx, e(Q, 2), {}, 5, 5);
    REQUIRE(m4.solutions.size() == 1);
    CHECK(m4.solutions[0].first == 0);

    CHECK_THROWS_AS(laurent_enumerate(f, NFElem::zero(Q), {e(Q, 3)}, 3, 3), Error);
    CHECK_THROWS_AS(laurent_enumerate(f, e(Q, 2), {e(Q, 3), e(Q, 5)}, 3, 3), Error);
}

TEST_CASE("witness soundness after a serialization round-trip") {
    NFMatrix g4 = matq(Q, 2, {q(4), q(0), q(0), q(1, 4)});
    NFMatrix g2 = matq(Q, 2, {q(2), q(0), q(0), q(1, 2)});
    JReport r = compute_J(g4, {g2}, 5, 12);
    for (const auto &w : r.witnesses) {
        // re-verify from the plain data, as a deserializer would
        NFMatrix prod = NFMatrix::identity(Q, 2);
        prod = prod * nf_pow(g2, w.exponents[0]);
        CHECK(prod == nf_pow(g4, w.m));
    }
}

TEST_CASE("enlarging box or range never removes witnesses") {
    NFMatrix g4 = matq(Q, 2, {q(4), q(0), q(0), q(1, 4)});
    NFMatrix g2 = matq(Q, 2, {q(2), q(0), q(0), q(1, 2)});
    JReport small = compute_J(g4, {g2}, 4, 8);
    JReport big = compute_J(g4, {g2}, 6, 14);
    for (const auto &w : small.witnesses) {
        bool found = false;
        for (const auto &v : big.witnesses)
            if (v.m == w.m) found = true;
        CHECK(found);
    }
}
