#include <doctest.h>

#include "test_support.hpp"

using namespace loopcalc;

namespace {
const SpacePreset& Y() {
    static SpacePreset y = preset_y();
    return y;
}
} // namespace

TEST_CASE("Y preset generator data") {
    CHECK(Y().dimension == 6);
    CHECK(Y().generators.size() == 10);
    auto a1 = Y().generator("A1");
    CHECK(a1->degree == 1);
    CHECK(a1->spherical);
    CHECK(a1->skeleton == 2);
    auto d = Y().generator("D");
    CHECK(d->degree == 3);
    CHECK(d->skeleton == 6);
    CHECK_FALSE(d->spherical);
    CHECK_THROWS_AS(Y().generator("E9"), calc_error);

    // boundary(C1) = A1 B + B A1
    auto c1 = Y().generator("C1");
    CHECK(c1->boundary == bracket(Y().chain("A1"), Y().chain("B")));
    CHECK(c1->boundary.term_count() == 2);

    // boundary(D) = 2 sum_i A_i A_i after word expansion
    FormalChain expect;
    for (int i = 1; i <= 4; ++i) {
        auto ai = Y().chain("A" + std::to_string(i));
        expect = add(expect, scalar(2, product(ai, ai)));
    }
    CHECK(d->boundary == expect);
    CHECK(is_cycle(d->boundary));
}

TEST_CASE("Z1 is the Jacobi cycle of degree 4") {
    auto z1 = build_z1(Y());
    CHECK(z1.degree() == 4);
    CHECK(z1.curfew() == Rat(3));
    CHECK(z1.term_count() == 10);
    CHECK(is_cycle(z1));
}

TEST_CASE("Z_L: cycles for all powers of two") {
    CHECK(build_zl(Y(), 1) == build_z1(Y()));
    CHECK_THROWS_AS(build_zl(Y(), 3), calc_error);
    CHECK_THROWS_AS(build_zl(Y(), 0), calc_error);
    for (std::uint64_t L : {2u, 4u, 64u, 1024u}) {
        auto zl = build_zl(Y(), L);
        CHECK(zl.degree() == 4);
        CHECK(zl.curfew() == Rat(3 * L));
        CHECK(is_cycle(zl));
    }
}

TEST_CASE("Z_L cost bounds: exact scaling constants") {
    for (unsigned k = 1; k <= 10; ++k) {
        std::uint64_t L = std::uint64_t(1) << k;
        auto cb = cost_bounds(build_zl(Y(), L));
        CHECK(cb.suplength == Rat(3 * L));
        CHECK(cb.volume == Rat(24) * Rat(L) * Rat(k));
    }
    // L = 1: no witnesses; the 3-cell normalization makes the bound zero
    auto cb1 = cost_bounds(build_z1(Y()));
    CHECK(cb1.suplength == Rat(2));
    CHECK(cb1.volume == Rat(0));
}

TEST_CASE("pair(a1 c1, Z_L) = L^3 pair(a1 c1, Z_1)") {
    auto w = Y().parse_word("a1 c1");
    Rat base = pair_chain(w, build_z1(Y()), Y().table);
    for (std::uint64_t L : {2u, 8u, 32u}) {
        Rat l3 = Rat(L) * Rat(L) * Rat(L);
        CHECK(pair_chain(w, build_zl(Y(), L), Y().table) == l3 * base);
    }
}

TEST_CASE("sphere presets") {
    CHECK_THROWS_AS(preset_sphere(1), calc_error);
    auto s4 = preset_sphere(4);
    CHECK(s4.generator("zeta")->degree == 3);
    CHECK(s4.form("omega").degree == 4);
    CHECK(word_degree(FormWord{s4.form("omega"), s4.form("omega")}) == 6);

    auto s3 = preset_sphere(3);
    CHECK_THROWS_AS(sphere_hopf_family(s3, 4), calc_error); // odd sphere

    auto fam = sphere_degree_family(s4, 8);
    CHECK(fam.degree() == 3);
    CHECK(is_cycle(fam));
    auto hopf = sphere_hopf_family(s4, 8);
    CHECK(hopf.degree() == 6);
    CHECK(is_cycle(hopf));
}

TEST_CASE("preset lookup by name") {
    CHECK(preset_by_name("Y").has_value());
    CHECK(preset_by_name("S2").has_value());
    CHECK(preset_by_name("S17").has_value());
    CHECK_FALSE(preset_by_name("S1").has_value());
    CHECK_FALSE(preset_by_name("T2").has_value());
}
