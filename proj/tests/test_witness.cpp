#include <doctest.h>

#include "test_support.hpp"
#include "witness.hpp"

using namespace loopcalc;

namespace {
const SpacePreset& Y() {
    static SpacePreset y = preset_y();
    return y;
}
} // namespace

TEST_CASE("single-scale witness: boundary and bounds") {
    auto a1 = Y().chain("A1");
    auto b = Y().chain("B");
    auto w = single_scale_witness(a1, b);

    auto expected = sub(scalar(2, loop_power(2, bracket(a1, b))),
                        bracket(loop_power(2, a1), loop_power(2, b)));
    CHECK(w->boundary == expected);
    CHECK(w->dimension == 3);
    CHECK(w->suplength == Rat(4));                 // 4*L1 at unit suplength
    CHECK(w->volume == Rat(2));                    // C*L0^2*(L0+L1) at unit data -> 2C
    CHECK(w->volume == w->piece_p1 + w->piece_p2 + w->piece_p3);
    CHECK(w->curfew == Rat(4));
    CHECK(w->skeleton == 2);
    CHECK(is_cycle(w->boundary));

    // interning: same inputs give the same witness object
    CHECK(single_scale_witness(a1, b).get() == w.get());

    CHECK_THROWS_AS(single_scale_witness(Y().chain("C1"), b), calc_error); // not spherical
    CHECK_THROWS_AS(single_scale_witness(a1, loop_power(2, b)), calc_error); // curfew mismatch
}

TEST_CASE("multiscale witness: telescoping boundary identity") {
    auto a1 = Y().chain("A1");
    auto b = Y().chain("B");

    CHECK(multiscale_witness(a1, b, 1).is_zero());
    CHECK_THROWS_AS(multiscale_witness(a1, b, 3), calc_error);
    CHECK_THROWS_AS(multiscale_witness(a1, b, 0), calc_error);

    for (std::uint64_t L : {2u, 4u, 8u, 64u}) {
        auto p = multiscale_witness(a1, b, L);
        auto endpoints = sub(bracket(loop_power(L, a1), loop_power(L, b)),
                             scalar(Rat(L), loop_power(L, bracket(a1, b))));
        CHECK(boundary(p) == endpoints);
    }

    // term-by-term telescope expansion oracle at L = 8: the three summand
    // boundaries cancel pairwise except for the two ends.
    {
        std::uint64_t L = 8;
        unsigned k = 3;
        FormalChain acc;
        for (unsigned i = 0; i < k; ++i) {
            std::uint64_t half = std::uint64_t(1) << (k - 1 - i);
            auto w = single_scale_witness(loop_power(half, a1), loop_power(half, b));
            acc = add(acc, scalar(-Rat(std::uint64_t(1) << i),
                                  loop_power(std::uint64_t(1) << i, w->boundary)));
        }
        auto endpoints = sub(bracket(loop_power(L, a1), loop_power(L, b)),
                             scalar(Rat(L), loop_power(L, bracket(a1, b))));
        CHECK(acc == endpoints);
        CHECK(boundary(multiscale_witness(a1, b, L)) == acc);
    }
}

TEST_CASE("multiscale witness: exact L log L volume, 4 L L1 suplength") {
    auto a1 = Y().chain("A1");
    auto b = Y().chain("B");
    // theta = (L0 + l1) * L0^(n1+n2) = 2 at unit data; volume = theta/2 * L log2 L
    for (unsigned k = 1; k <= 10; ++k) {
        std::uint64_t L = std::uint64_t(1) << k;
        auto cb = cost_bounds(multiscale_witness(a1, b, L));
        CHECK(cb.volume == Rat(L) * Rat(k));
        // every summand: scale 2^i times witness suplength 4*2^(k-1-i) = 2L
        CHECK(cb.suplength == Rat(2 * L));
    }
}

TEST_CASE("multiscale witness: skeleton support and cost monotonicity") {
    auto a1 = Y().chain("A1");
    auto b = Y().chain("B");
    auto p = multiscale_witness(a1, b, 16);
    for (const auto& [w, c] : p.terms()) {
        REQUIRE(w.size() == 1);
        CHECK(w[0].skeleton() == 2);
    }
    Rat prev = 0;
    for (unsigned k = 1; k <= 8; ++k) {
        std::uint64_t L = std::uint64_t(1) << k;
        Rat v = cost_bounds(multiscale_witness(a1, b, L)).volume;
        CHECK(v > prev);
        if (k >= 2) {
            // ratio <= 2 * log2(2L)/log2(L)
            CHECK(v * Rat(k - 1) <= 2 * Rat(k) * prev);
        }
        prev = v;
    }
}

TEST_CASE("naive witness: boundary contract and exact quadratic volume") {
    auto a1 = Y().chain("A1");
    auto b = Y().chain("B");

    CHECK(naive_witness(a1, b, 1).is_zero());

    for (std::uint64_t L : {2u, 4u, 8u}) {
        CHECK(boundary(naive_witness(a1, b, L)) == boundary(multiscale_witness(a1, b, L)));
    }
    // exact theta/2 * L^2 with theta = 2 at unit data
    for (std::uint64_t L : {2u, 3u, 5u, 16u, 64u, 1024u}) {
        CHECK(cost_bounds(naive_witness(a1, b, L)).volume == Rat(L) * Rat(L));
    }
    // volume ratio naive/multiscale at L = 1024 is exactly L/log2(L) = 102.4
    auto naive = cost_bounds(naive_witness(a1, b, 1024)).volume;
    auto multi = cost_bounds(multiscale_witness(a1, b, 1024)).volume;
    CHECK(naive / multi == Rat(1024, 10));
}
