#include <doctest.h>

#include <random>

#include "geom/homology_numeric.hpp"

using namespace loopcalc::geom;

namespace {

GeomConfig fast_cfg() {
    GeomConfig cfg;
    cfg.resolution = 32;
    cfg.samples = 128;
    return cfg;
}

DiscreteLoop random_loop(std::mt19937_64& rng, int steps, int samples) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<Vec3> knots;
    knots.push_back(north_pole());
    Vec3 cur = north_pole();
    for (int i = 0; i < steps; ++i) {
        Vec3 step{unit(rng), unit(rng), unit(rng)};
        cur = normalized(cur + 0.7 * step);
        knots.push_back(cur);
    }
    knots.push_back(north_pole());
    DiscreteLoop poly;
    poly.curfew = 1.0;
    poly.pts = knots;
    return resample(poly, samples);
}

} // namespace

TEST_CASE("loop_distance: metric axioms on random triples") {
    std::mt19937_64 rng(0x10095eed);
    for (int i = 0; i < 300; ++i) {
        auto a = random_loop(rng, 6, 64);
        auto b = random_loop(rng, 6, 64);
        auto c = random_loop(rng, 6, 64);
        CHECK(loop_distance(a, a) == 0.0);
        CHECK(loop_distance(a, b) == loop_distance(b, a));
        CHECK(loop_distance(a, c) <= loop_distance(a, b) + loop_distance(b, c) + 1e-12);
    }
    auto a = random_loop(rng, 6, 64);
    auto b = random_loop(rng, 6, 32);
    CHECK_THROWS(loop_distance(a, b));
}

TEST_CASE("loop_distance: constant vs meridian loop is pi") {
    GeomConfig cfg = fast_cfg();
    auto sweep = sweepout_s2(cfg);
    DiscreteLoop meridian = sweep.at({0.25});
    DiscreteLoop konst = constant_family(0, 1.0, cfg).at({});
    konst = resample(konst, static_cast<int>(meridian.pts.size()) - 1);
    CHECK(loop_distance(konst, meridian) == doctest::Approx(M_PI).epsilon(1e-6));
}

TEST_CASE("sweepout: basepoint condition and suplength 2 pi") {
    GeomConfig cfg;
    auto f = sweepout_s2(cfg);
    for (double s : {0.0, 0.3, 0.77, 1.0}) {
        auto loop = f.at({s});
        CHECK(norm(loop.pts.front() - north_pole()) == 0.0);
        CHECK(norm(loop.pts.back() - north_pole()) == 0.0);
        for (const auto& p : loop.pts) CHECK(std::abs(norm(p) - 1.0) < 1e-12);
    }
    // gamma_0 = gamma_1
    CHECK(loop_distance(f.at({0.0}), f.at({1.0})) < 1e-12);
    CHECK(family_suplength(f, 16) == doctest::Approx(2 * M_PI).epsilon(1e-3));

    auto based = based_sweepout_s2(cfg);
    CHECK(based.at({0.0}).length() < 1e-12); // genuinely constant basepoint loop
    CHECK(family_suplength(based, 32) == doctest::Approx(2 * M_PI).epsilon(1e-3));
}

TEST_CASE("chen integral: sweepout degree and rescaling") {
    GeomConfig cfg; // spec defaults R = 64, M = 256
    auto z = sweepout_s2(cfg);
    CHECK(chen_integral_numeric(1, z, cfg) == doctest::Approx(1.0).epsilon(1e-3));
    for (std::uint64_t L : {2u, 4u, 8u}) {
        auto zl = power(L, z, cfg);
        CHECK(chen_integral_numeric(1, zl, cfg) ==
              doctest::Approx(static_cast<double>(L)).epsilon(1e-3));
    }
    // based variant has the same degree
    CHECK(chen_integral_numeric(1, based_sweepout_s2(cfg), cfg) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("chen integral: additivity under concat with a 0-family") {
    GeomConfig cfg = fast_cfg();
    auto z = sweepout_s2(cfg);
    auto point = constant_family(0, 1.0, cfg);
    double direct = chen_integral_numeric(1, z, cfg);
    CHECK(chen_integral_numeric(1, concat(z, point, cfg), cfg) ==
          doctest::Approx(direct).epsilon(1e-3));
    CHECK(chen_integral_numeric(1, concat(point, z, cfg), cfg) ==
          doctest::Approx(direct).epsilon(1e-3));
    // degree mismatch pairs to zero
    CHECK(chen_integral_numeric(2, z, cfg) == 0.0);
    CHECK(chen_integral_numeric(1, point, cfg) == 0.0);
}

TEST_CASE("chen integral: two-letter word against the bracket family") {
    GeomConfig cfg;
    cfg.resolution = 32;
    cfg.samples = 192;
    auto z = based_sweepout_s2(cfg);
    for (std::uint64_t L : {1u, 2u}) {
        auto zl = power(L, z, cfg);
        NumericChain br;
        br.parts.push_back({concat(zl, zl, cfg), 1, 1, "z.z"});
        br.parts.push_back({concat(zl, zl, cfg), 1, 1, "z.z swapped"});
        double v = chen_integral_numeric(2, br, cfg);
        CHECK(v == doctest::Approx(2.0 * static_cast<double>(L * L)).epsilon(0.05));
    }
}

TEST_CASE("concat adds curfews and suplengths") {
    GeomConfig cfg = fast_cfg();
    auto z = sweepout_s2(cfg);
    auto zz = concat(z, z, cfg);
    CHECK(zz.arity == 2);
    CHECK(zz.curfew == 2.0);
    double sl = family_suplength(z, 8);
    CHECK(family_suplength(zz, 8) == doctest::Approx(2 * sl).epsilon(1e-9));
    CHECK(power(1, z, cfg).arity == 1);
    CHECK(family_suplength(power(4, z, cfg), 8) == doctest::Approx(4 * sl).epsilon(1e-9));
}

TEST_CASE("volume_upper: constants, sweepout, products, powers") {
    GeomConfig cfg = fast_cfg();
    CHECK(volume_upper(constant_family(1, 1.0, cfg), cfg).value == 0.0);

    auto z = sweepout_s2(cfg);
    auto est = volume_upper(z, cfg);
    CHECK(est.converged);
    // 1-dimensional bound vs fine polygonal length oracle
    double oracle = 0;
    int fine = 512;
    for (int j = 0; j < fine; ++j)
        oracle += loop_distance(z.at({static_cast<double>(j) / fine}),
                                z.at({static_cast<double>(j + 1) / fine}));
    CHECK(est.value >= oracle / 4.0);
    CHECK(est.value <= oracle * 4.0);

    // {L} is 1-Lipschitz on constant-curfew families
    auto estL = volume_upper(power(4, z, cfg), cfg);
    CHECK(estL.value <= est.value * (1 + 1e-6) + 1e-9);

    // product bound multiplies within C <= 4
    auto zz = concat(z, z, cfg);
    auto est2 = volume_upper(zz, cfg);
    CHECK(est2.value <= 4.0 * est.value * est.value);
    CHECK(est2.value >= est.value * est.value / 4.0);

    CHECK(est.padded_value >= est.value);
}

TEST_CASE("volume_upper is deterministic") {
    GeomConfig cfg = fast_cfg();
    auto z = sweepout_s2(cfg);
    auto a = volume_upper(concat(z, z, cfg), cfg);
    auto b = volume_upper(concat(z, z, cfg), cfg);
    CHECK(a.value == b.value);
}

TEST_CASE("multiscale families: faces match the telescope endpoints") {
    GeomConfig cfg;
    cfg.samples = 128;
    std::uint64_t L = 8;
    auto chain = build_p_numeric(L, cfg);
    REQUIRE(!chain.parts.empty());

    // locate the i=0 P1a piece and the top-scale P3 piece
    const WeightedFamily* p1a = nullptr;
    const WeightedFamily* p3 = nullptr;
    for (const auto& part : chain.parts) {
        if (part.tag == "P1a@i0") p1a = &part;
        if (part.tag == "P3@i2") p3 = &part;
    }
    REQUIRE(p1a != nullptr);
    REQUIRE(p3 != nullptr);

    auto lhs = bracket_endpoint_family(L, cfg);
    auto fa = face(p1a->fam, 2, 0);
    int M = 512;
    for (double u1 : {0.0, 0.35, 0.8})
        for (double u2 : {0.1, 0.6}) {
            auto a = resample(fa.at({u1, u2}), M);
            auto b = resample(lhs.at({u1, u2}), M);
            CHECK(loop_distance(a, b) < 1e-9);
        }

    auto rhs = rescaled_endpoint_family(L, cfg);
    auto fb = face(p3->fam, 2, 0);
    for (double u1 : {0.2, 0.9})
        for (double u2 : {0.05, 0.5}) {
            auto a = resample(fb.at({u1, u2}), M);
            auto b = resample(rhs.at({u1, u2}), M);
            CHECK(loop_distance(a, b) < 1e-9);
        }
    // weight bookkeeping at the rescaled endpoint: 2 * 2^(k-1) = L
    CHECK(p3->weight == static_cast<double>(L));

    // suplength of the assembly stays within 4 L suplength(zeta)
    double sl = chain_suplength(chain, 6);
    CHECK(sl <= 4.0 * static_cast<double>(L) * 2 * M_PI * (1 + 1e-6));
}

TEST_CASE("naive families: L = 1 empty, slides present") {
    GeomConfig cfg = fast_cfg();
    CHECK(build_p_naive_numeric(1, cfg).parts.empty());
    auto c = build_p_naive_numeric(4, cfg);
    int slides = 0;
    for (const auto& p : c.parts)
        if (p.tag.rfind("Nslide", 0) == 0) ++slides;
    CHECK(slides == 3);
}
