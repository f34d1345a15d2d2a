#pragma once

// Concrete loop families realizing the Theorem B homology for two copies of
// the S^2 sweepout (n1 = n2 = 1): the dyadic multi-scale assembly and the
// unary-telescope comparator whose measured volume grows quadratically.

#include "chen_numeric.hpp"

namespace loopcalc::geom {

// Multi-scale homology: per scale i < log2(L), the single-scale pieces
// (diagonal-to-bouquet brackets P1, reparametrization slides P2, the
// four-factor bouquet P3 and its slides) built from {2^(k-1-i)}-scaled based
// sweepouts, wrapped {2^i} with coefficient 2^i. Families with equal volume
// by block permutation are folded into multiplicities.
NumericChain build_p_numeric(std::uint64_t L, const GeomConfig& cfg = GeomConfig{});

// Unary comparator: one full-scale diagonal-to-bouquet split plus, for each
// translate position p, a slide moving it home across p-1 curfew slots, and
// {L}-wrapped unit-scale consolidation closers. Measured volume Theta(L^2).
NumericChain build_p_naive_numeric(std::uint64_t L, const GeomConfig& cfg = GeomConfig{});

// The telescope endpoint families (for face matching): [{L}Z1, {L}Z2] and
// the {L}-wrap of the concatenated pair family.
LoopFamily bracket_endpoint_family(std::uint64_t L, const GeomConfig& cfg = GeomConfig{});
LoopFamily rescaled_endpoint_family(std::uint64_t L, const GeomConfig& cfg = GeomConfig{});

} // namespace loopcalc::geom
