#pragma once

// Efficient homology witnesses between the two rescalings of a graded
// commutator of spherical cycles: the single-scale chain P', the dyadic
// multi-scale telescope, and the quadratic unary comparator.

#include "chain.hpp"

namespace loopcalc {

// P'(Z1, Z2): constant-curfew (n1+n2+1)-witness with
//   boundary = 2{2}[Z1,Z2] - [{2}Z1, {2}Z2],
// suplength bound 4*L1 and volume bound C*L0^(n1+n2)*(m*L0 + L1), where m is
// the common input scale, L0 the base Lipschitz datum and L1 the input
// suplength. Inputs must be single spherical cycle atoms of equal curfew.
WitnessRef single_scale_witness(const FormalChain& z1, const FormalChain& z2,
                                const CostModel& model = CostModel{});

// Telescope over scales 2^i, i = 0..log2(L)-1; normalizes so that
//   boundary = [{L}Z1, {L}Z2] - L*{L}[Z1, Z2]  exactly.
// L must be a power of two; L = 1 gives the zero chain.
FormalChain multiscale_witness(const FormalChain& z1, const FormalChain& z2, std::uint64_t L,
                               const CostModel& model = CostModel{});

// Unary L-step comparator with the same boundary as multiscale_witness and a
// volume bound of exactly (L0 + L1) * L0^(n1+n2) * L^2 / 2. Any L >= 1.
FormalChain naive_witness(const FormalChain& z1, const FormalChain& z2, std::uint64_t L,
                          const CostModel& model = CostModel{});

// Internal builder used by deserialization: step j of naive_witness(L).
WitnessRef naive_step_witness(std::uint64_t j, std::uint64_t L, const FormalChain& z1,
                              const FormalChain& z2, const CostModel& model = CostModel{});

} // namespace loopcalc
