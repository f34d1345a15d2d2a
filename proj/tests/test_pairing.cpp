#include <doctest.h>

#include "test_support.hpp"
#include "chain_json.hpp"

using namespace loopcalc;

namespace {
const SpacePreset& Y() {
    static SpacePreset y = preset_y();
    return y;
}
} // namespace

TEST_CASE("word degree") {
    CHECK(word_degree(Y().parse_word("a1 c1")) == 4);
    CHECK(word_degree(Y().parse_word("a1")) == 1);
    CHECK(word_degree(FormWord{}) == 0);
    CHECK_THROWS_AS(Y().parse_word("nope"), calc_error);
}

TEST_CASE("dimension convention: mismatched degrees pair to zero") {
    CHECK(pair_chain(Y().parse_word("a1"), Y().chain("D"), Y().table) == Rat(0));
    CHECK(pair_chain(Y().parse_word("a1 c1"), Y().chain("B"), Y().table) == Rat(0));
    CHECK(pair_chain(FormWord{}, Y().chain("B"), Y().table) == Rat(0));
}

TEST_CASE("suspension table base cases") {
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            Rat expect = (i == j) ? 1 : 0;
            CHECK(pair_chain(Y().parse_word("a" + std::to_string(j)),
                             Y().chain("A" + std::to_string(i)), Y().table) == expect);
            CHECK(pair_chain(Y().parse_word("c" + std::to_string(j)),
                             Y().chain("C" + std::to_string(i)), Y().table) == expect);
        }
    CHECK(pair_chain(Y().parse_word("a1"), Y().chain("B"), Y().table) == Rat(0));
    CHECK(pair_chain(Y().parse_word("c1"), Y().chain("D"), Y().table) == Rat(0));
    CHECK(pair_chain(Y().parse_word("b"), Y().chain("B"), Y().table) == Rat(1));
    CHECK(pair_chain(Y().parse_word("d"), Y().chain("D"), Y().table) == Rat(1));
}

TEST_CASE("empty word is the augmentation on 0-chains") {
    auto bullet = chain_of(bullet_generator());
    CHECK(pair_chain(FormWord{}, scalar(Rat(5, 2), bullet), Y().table) == Rat(5, 2));
    auto two_slot = add(product(bullet, bullet), scalar(2, loop_power(2, bullet)));
    CHECK(pair_chain(FormWord{}, two_slot, Y().table) == Rat(3));
    CHECK(pair_chain(FormWord{}, FormalChain::unit(Rat(7)), Y().table) == Rat(7));
}

TEST_CASE("rescaling rule: closed one-letter words against scaled atoms") {
    auto c1 = Y().chain("C1");
    CHECK(pair_chain(Y().parse_word("c1"), loop_power(6, c1), Y().table) == Rat(6));
    auto a1 = Y().chain("A1");
    CHECK(pair_chain(Y().parse_word("a1"), loop_power(9, a1), Y().table) == Rat(9));
}

TEST_CASE("Chen splitting over products") {
    auto a1 = Y().chain("A1");
    auto c1 = Y().chain("C1");
    // <int a1 c1, A1 C1> = <a1,A1><c1,C1> = 1; reversed order vanishes on dimensions
    CHECK(pair_chain(Y().parse_word("a1 c1"), product(a1, c1), Y().table) == Rat(1));
    CHECK(pair_chain(Y().parse_word("a1 c1"), product(c1, a1), Y().table) == Rat(0));

    // splitting consistency for single-letter words: the only nonzero split
    // pairs the letter with the positive-degree factor and the empty word
    // with a 0-chain factor.
    auto bullet = chain_of(bullet_generator());
    CHECK(pair_chain(Y().parse_word("a1"), product(a1, bullet), Y().table) == Rat(1));
    CHECK(pair_chain(Y().parse_word("a1"), product(bullet, a1), Y().table) == Rat(1));
    CHECK(pair_chain(Y().parse_word("a1"), product(scalar(3, bullet), a1), Y().table) == Rat(3));
}

TEST_CASE("bilinearity") {
    std::mt19937_64 rng(0x5eedbeef);
    auto w = Y().parse_word("a1 c1");
    auto x = product(Y().chain("A1"), Y().chain("C1"));
    auto y = product(Y().chain("A2"), Y().chain("C2"));
    auto lhs = pair_chain(w, add(scalar(Rat(3, 7), x), y), Y().table);
    CHECK(lhs == Rat(3, 7) * pair_chain(w, x, Y().table) + pair_chain(w, y, Y().table));
}

TEST_CASE("skeleton vanishing kills c-letters on 2-skeleton chains") {
    // <int c1, {k} P'> = 0: every letter vanishes on the skeleton carrying
    // the witness, which is what makes the Z_L pairing exact.
    auto a1 = Y().chain("A1");
    auto b = Y().chain("B");
    auto w = single_scale_witness(a1, b);
    CHECK(pair_chain(Y().parse_word("c1"), chain_of(w), Y().table) == Rat(0));
    CHECK(pair_chain(Y().parse_word("c1"), loop_power(4, chain_of(w)), Y().table) == Rat(0));
}

TEST_CASE("inexpressible pairings raise, never silently zero") {
    auto a1 = Y().chain("A1");
    auto b = Y().chain("B");

    // the Y 4-forms all vanish on the 2-skeleton, so witness pairings there
    // are killed by the skeleton rule instead of erroring
    auto wD = single_scale_witness(a1, a1);
    CHECK(pair_chain(Y().parse_word("d"), chain_of(wD), Y().table) == Rat(0));

    // a degree-4 form that survives the skeleton rule has no rule against an
    // opaque witness: explicit error
    auto s2 = preset_sphere(2);
    auto zeta = s2.chain("zeta");
    auto wS = single_scale_witness(zeta, zeta); // dimension 3, skeleton 2
    FormWord phi = {FormLabel{"phi", 4, true, 1}};
    CHECK_THROWS_AS(pair_chain(phi, chain_of(wS), s2.table), calc_error);
    FormWord www = {s2.form("omega"), s2.form("omega"), s2.form("omega")};
    CHECK_THROWS_AS(pair_chain(www, chain_of(wS), s2.table), calc_error);

    // multi-letter word against a scaled product word with matching degree
    auto prod = product(a1, b); // degree 2
    auto scaled = loop_power(2, prod);
    FormWord w2 = Y().parse_word("a1 a2");
    CHECK_THROWS_AS(pair_chain(w2, scaled, Y().table), calc_error);
    try {
        pair_chain(w2, scaled, Y().table);
    } catch (const calc_error& e) {
        CHECK(e.code() == errc::inexpressible_pairing);
    }
}

TEST_CASE("paper values: Z1 and Z_L against int a1 c1") {
    auto z1 = build_z1(Y());
    CHECK(pair_chain(Y().parse_word("a1 c1"), z1, Y().table) == Rat(2));
    for (std::uint64_t L : {2u, 4u, 64u}) {
        auto zl = build_zl(Y(), L);
        CHECK(pair_chain(Y().parse_word("a1 c1"), zl, Y().table) == 2 * Rat(L) * Rat(L) * Rat(L));
    }
}

TEST_CASE("distortion certificate: Y family ratio is exactly 27/4") {
    auto w = Y().parse_word("a1 c1");
    CycleFamily fam = [&](std::uint64_t L) { return build_zl(Y(), L); };
    for (std::uint64_t L : {2u, 16u, 64u}) {
        auto cb = distortion_certificate(w, fam, L, Y().table);
        unsigned k = log2_exact(L);
        CHECK(cb.suplength == Rat(3 * L));
        CHECK(cb.volume == Rat(24 * L) * Rat(k));
        CHECK(cb.pairing == 2 * Rat(L) * Rat(L) * Rat(L));
        // value * log2(L) / L^6 == 27/4
        Rat l6 = 1;
        for (int i = 0; i < 6; ++i) l6 *= Rat(L);
        CHECK(cb.value * Rat(k) / l6 == Rat(27, 4));
    }
    // L = 1: zero volume bound, lambda falls back to 1, value = pairing = 2
    auto cb1 = distortion_certificate(w, fam, 1, Y().table);
    CHECK(cb1.lambda == Rat(1));
    CHECK(cb1.value == Rat(2));
}

TEST_CASE("distortion certificate: sphere families") {
    for (int n : {2, 4}) {
        auto s = preset_sphere(n);
        auto w = s.parse_word("omega");
        CycleFamily fam = [&](std::uint64_t L) { return sphere_degree_family(s, L); };
        for (std::uint64_t L : {2u, 8u, 64u}) {
            auto cb = distortion_certificate(w, fam, L, s.table);
            Rat ln = 1;
            for (int i = 0; i < n; ++i) ln *= Rat(L);
            CHECK(cb.lambda == Rat(1)); // the family already saturates its budget
            CHECK(cb.value == ln);
        }
        // Hopf word on even spheres
        FormWord ww = {s.form("omega"), s.form("omega")};
        CycleFamily hopf = [&](std::uint64_t L) { return sphere_hopf_family(s, L); };
        for (std::uint64_t L : {2u, 8u}) {
            auto cb = distortion_certificate(ww, hopf, L, s.table);
            Rat l2n = 1;
            for (int i = 0; i < 2 * n; ++i) l2n *= Rat(L);
            Rat pow2 = 1;
            for (int i = 0; i < 2 * n - 2; ++i) pow2 *= 2;
            // lambda = (2L)^(2n-2) / (2 L^(2n-2)) = 2^(2n-3); value = lambda * 2 L^(2n)
            CHECK(cb.value == pow2 * l2n);
        }
    }
}

TEST_CASE("sphere preset pairing identities") {
    auto s2 = preset_sphere(2);
    auto zeta = s2.chain("zeta");
    CHECK(pair_chain(s2.parse_word("omega"), loop_power(7, zeta), s2.table) == Rat(7));
    FormWord ww = {s2.form("omega"), s2.form("omega")};
    CHECK(word_degree(ww) == 2);
    CHECK(pair_chain(ww, bracket(zeta, zeta), s2.table) == Rat(2));
    for (std::uint64_t L : {2u, 8u}) {
        auto br = bracket(loop_power(L, zeta), loop_power(L, zeta));
        CHECK(pair_chain(ww, br, s2.table) == 2 * Rat(L) * Rat(L));
    }
}

TEST_CASE("certificate JSON schema") {
    auto w = Y().parse_word("a1 c1");
    CycleFamily fam = [&](std::uint64_t L) { return build_zl(Y(), L); };
    auto cb = distortion_certificate(w, fam, 4, Y().table);
    auto js = certificate_to_json(cb);
    CHECK(js.find("\"L\":4") != std::string::npos);
    CHECK(js.find("\"suplength\":\"12\"") != std::string::npos);
    CHECK(js.find("\"lambda\":") != std::string::npos);
}
