#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace bglab;
using namespace bglab::testing;

namespace {

Rat box_width(const EmbeddingBox &b) {
    Rat w1 = b.real_hi - b.real_lo;
    Rat w2 = b.imag_hi - b.imag_lo;
    return w1 > w2 ? w1 : w2;
}

Rat two_pow_neg(int bits) { return Rat(1) / Rat(int_pow(2, static_cast<unsigned>(bits))); }

} // namespace

TEST_CASE("embeddings of t^2+1 enclose +-i") {
    NumberField Qi = nf_new(poly({1, 0, 1}));
    auto boxes = embeddings(Qi, 32);
    REQUIRE(boxes.size() == 2);
    for (const auto &b : boxes) CHECK(box_width(b) <= two_pow_neg(32));
    // sorted by real, then imaginary midpoint
    CHECK(boxes[0].imag_mid() < 0);
    CHECK(boxes[1].imag_mid() > 0);
    CHECK(rabs(boxes[0].real_mid()) <= two_pow_neg(30));
    CHECK(rabs(boxes[1].imag_mid() - 1) <= two_pow_neg(30));
}

TEST_CASE("embeddings of t-1 is the exact point 1") {
    auto boxes = embeddings(nf_rationals(), 32);
    REQUIRE(boxes.size() == 1);
    CHECK(boxes[0].real_lo == Rat(1));
    CHECK(boxes[0].real_hi == Rat(1));
    CHECK(boxes[0].imag_lo == Rat(0));
}

TEST_CASE("embeddings of t^3-t-1: one real box near 1.3247, a conjugate pair") {
    NumberField K = nf_new(poly({-1, -1, 0, 1}));
    auto boxes = embeddings(K, 32);
    REQUIRE(boxes.size() == 3);
    int real_boxes = 0;
    for (const auto &b : boxes)
        if (b.imag_lo == Rat(0) && b.imag_hi == Rat(0)) ++real_boxes;
    CHECK(real_boxes == 1);
    const EmbeddingBox &rb = boxes[2]; // the real root is the largest real part
    CHECK(rb.imag_lo == Rat(0));
    // sign change across the real interval certifies the root (plastic number)
    UPoly<Rat> h = K.minpoly();
    CHECK(sgn(upoly_eval(h, Rat(rb.real_lo - Rat(1, 1000)))) !=
          sgn(upoly_eval(h, Rat(rb.real_hi + Rat(1, 1000)))));
    CHECK(rb.real_mid() > q(13, 10));
    CHECK(rb.real_mid() < q(14, 10));
    // conjugate pair is exactly mirrored
    CHECK(boxes[0].real_mid() == boxes[1].real_mid());
    CHECK(boxes[0].imag_mid() == -boxes[1].imag_mid());
}

TEST_CASE("product of (t - midpoint) over all boxes approximates the minpoly") {
    NumberField K = nf_new(poly({1, 0, -1, 0, 1})); // zeta_12
    const int prec = 48;
    auto boxes = embeddings(K, prec);
    REQUIRE(boxes.size() == 4);
    // exact complex product of the monic linear factors at the midpoints
    std::vector<std::pair<Rat, Rat>> coeffs{{Rat(1), Rat(0)}};
    for (const auto &b : boxes) {
        std::vector<std::pair<Rat, Rat>> next(coeffs.size() + 1, {Rat(0), Rat(0)});
        for (size_t i = 0; i < coeffs.size(); ++i) {
            // times t
            next[i + 1].first += coeffs[i].first;
            next[i + 1].second += coeffs[i].second;
            // times (-midpoint)
            Rat mr = b.real_mid(), mi = b.imag_mid();
            next[i].first += -(coeffs[i].first * mr - coeffs[i].second * mi);
            next[i].second += -(coeffs[i].first * mi + coeffs[i].second * mr);
        }
        coeffs = std::move(next);
    }
    // tolerance: midpoint error per root is <= 2^-prec, amplified by small factors
    Rat tol = Rat(64) / Rat(int_pow(2, prec));
    const auto &h = K.minpoly().coeffs;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        CHECK(rabs(coeffs[i].first - h[i]) <= tol);
        CHECK(rabs(coeffs[i].second) <= tol);
    }
}

TEST_CASE("boxes are pairwise disjoint and deterministic") {
    NumberField K = nf_new(poly({1, 0, -1, 0, 1}));
    auto a = embeddings(K, 40);
    auto b = embeddings(K, 40);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].real_lo == b[i].real_lo);
        CHECK(a[i].imag_hi == b[i].imag_hi);
    }
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j) {
            bool separated = a[i].real_hi < a[j].real_lo || a[j].real_hi < a[i].real_lo ||
                             a[i].imag_hi < a[j].imag_lo || a[j].imag_hi < a[i].imag_lo;
            CHECK(separated);
        }
}
