#pragma once

// Shared helpers for the unit suites: random chain/loop generation and the
// brute-force word-level oracles the derived expectations are frozen against.

#include <random>

#include "chain.hpp"
#include "spaces.hpp"

namespace loopcalc::testing {

// Random valid chain over the Y generators, built from a random expression
// tree so every sample satisfies the construction invariants.
inline FormalChain random_chain(const SpacePreset& y, std::mt19937_64& rng, int depth = 2) {
    std::uniform_int_distribution<int> pick_gen(0, 9);
    static const char* ids[] = {"A1", "A2", "A3", "A4", "B", "C1", "C2", "C3", "C4", "D"};
    if (depth <= 0) {
        FormalChain c = y.chain(ids[pick_gen(rng)]);
        std::uniform_int_distribution<int> sc(1, 3);
        return loop_power(static_cast<std::uint64_t>(sc(rng)), c);
    }
    std::uniform_int_distribution<int> op(0, 5);
    switch (op(rng)) {
    case 0: return product(random_chain(y, rng, depth - 1), random_chain(y, rng, depth - 1));
    case 1: return bracket(random_chain(y, rng, depth - 1), random_chain(y, rng, depth - 1));
    case 2: {
        std::uniform_int_distribution<int> num(-3, 3);
        std::uniform_int_distribution<int> den(1, 4);
        return scalar(Rat(num(rng), den(rng)), random_chain(y, rng, depth - 1));
    }
    case 3: {
        std::uniform_int_distribution<int> sc(2, 4);
        return loop_power(static_cast<std::uint64_t>(sc(rng)), random_chain(y, rng, depth - 1));
    }
    case 4: {
        FormalChain c = random_chain(y, rng, depth - 1);
        return add(c, scalar(2, c)); // same-shape sum keeps degree/curfew homogeneous
    }
    default: return random_chain(y, rng, depth - 1);
    }
}

// Independent Leibniz oracle: expands the boundary of a single word directly
// at the word level (no reuse of the chain boundary path for products).
inline FormalChain leibniz_oracle(const FormalChain& c) {
    FormalChain out;
    for (const auto& [w, coeff] : c.terms()) {
        int sign_deg = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            FormalChain da = boundary(FormalChain::from_word(Word{w[i]}));
            int sign = (sign_deg % 2 != 0) ? -1 : 1;
            for (const auto& [dw, dc] : da.terms()) {
                Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
                nw.insert(nw.end(), dw.begin(), dw.end());
                nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
                out.add_term(nw, coeff * dc * sign);
            }
            sign_deg += w[i].degree();
        }
    }
    return out;
}

} // namespace loopcalc::testing
