#include <doctest.h>

#include "chain_json.hpp"
#include "test_support.hpp"

using namespace loopcalc;
using loopcalc::testing::random_chain;

namespace {
const SpacePreset& Y() {
    static SpacePreset y = preset_y();
    return y;
}
} // namespace

TEST_CASE("round-trip is bit-exact on generator chains") {
    auto z1 = build_z1(Y());
    auto text = chain_to_json(z1);
    auto back = chain_from_json(Y(), text);
    CHECK(back == z1);
    CHECK(chain_to_json(back) == text);
}

TEST_CASE("round-trip carries witness provenance") {
    auto zl = build_zl(Y(), 8);
    auto text = chain_to_json(zl);
    CHECK(text.find("single_scale") != std::string::npos);
    auto back = chain_from_json(Y(), text);
    CHECK(back == zl);
    CHECK(chain_to_json(back) == text);

    auto naive = naive_witness(Y().chain("A1"), Y().chain("B"), 4);
    auto ntext = chain_to_json(naive);
    CHECK(ntext.find("naive_step") != std::string::npos);
    CHECK(chain_from_json(Y(), ntext) == naive);
}

TEST_CASE("round-trip property over random chains") {
    std::mt19937_64 rng(0x5eedca11);
    for (int i = 0; i < 60; ++i) {
        auto c = random_chain(Y(), rng);
        auto text = chain_to_json(c);
        CHECK(chain_from_json(Y(), text) == c);
        CHECK(chain_to_json(chain_from_json(Y(), text)) == text);
    }
}

TEST_CASE("zero chain and scaled words") {
    CHECK(chain_from_json(Y(), chain_to_json(FormalChain::zero())).is_zero());
    auto scaled = loop_power(3, product(Y().chain("A1"), Y().chain("B")));
    CHECK(chain_from_json(Y(), chain_to_json(scaled)) == scaled);
}

TEST_CASE("malformed input surfaces parse errors") {
    CHECK_THROWS_AS(chain_from_json(Y(), "not json"), calc_error);
    CHECK_THROWS_AS(chain_from_json(Y(), "{\"terms\":[{\"coeff\":\"1\",\"word\":[{\"base\":\"E7\"}]}]}"),
                    calc_error);
    CHECK_THROWS_AS(chain_from_json(Y(), "{\"terms\":[{\"coeff\":\"1/0\",\"word\":[]}]}"), calc_error);
    CHECK_THROWS_AS(
        chain_from_json(Y(), "{\"degree\":3,\"curfew\":\"1\",\"terms\":[{\"coeff\":\"1\",\"word\":[{\"base\":\"A1\"}]}]}"),
        calc_error);
    // declared degree/curfew must match
    auto a1 = Y().chain("A1");
    auto good = chain_to_json(a1);
    CHECK(chain_from_json(Y(), good) == a1);
}
