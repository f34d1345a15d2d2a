#pragma once

// Preset base spaces: the punctured (CP^2)#4 x S^2 six-manifold with its
// Adams-Hilton generator data, and the S^n sweepout examples. Also the
// construction of the cycles Z_1 and Z_L from those generators.

#include <optional>

#include "pairing.hpp"
#include "witness.hpp"

namespace loopcalc {

class SpacePreset {
public:
    std::string name;
    int dimension = 0;
    std::vector<GeneratorRef> generators;
    std::vector<FormLabel> forms;
    PairingTable table;

    GeneratorRef generator(const std::string& id) const;
    const FormLabel& form(const std::string& id) const;
    FormalChain chain(const std::string& id) const { return chain_of(generator(id)); }

    // Whitespace-separated form labels, e.g. "a1 c1".
    FormWord parse_word(const std::string& text) const;
};

// Y = [(CP^2)#4 x S^2] with the puncture: generators A1..A4, B (degree 1)
// and C1..C4, D (degree 3); dual 2-forms a1..a4, b and 4-forms c1..c4, d.
SpacePreset preset_y();

// Omega(S^n): one spherical generator zeta of degree n-1 and the closed
// n-form omega with <int omega, zeta> = 1. Requires n >= 2.
SpacePreset preset_sphere(int n);

// Preset lookup by CLI name: "Y", "S2", "S3", ...
std::optional<SpacePreset> preset_by_name(const std::string& name);

// Degree-0 curfew-1 constant-loop generator used for curfew padding.
GeneratorRef bullet_generator();

// Z1 = [B, D] + 2 sum_i [A_i, C_i]; a 4-cycle of curfew 3.
FormalChain build_z1(const SpacePreset& y);

// Z_L from {L}-rescaled generators and the multiscale homologies; L a power
// of two, Z_1 for L = 1.
FormalChain build_zl(const SpacePreset& y, std::uint64_t L, const CostModel& model = CostModel{});

// Sphere example families: L^(n-1) {L}zeta and L^(2n-2) [{L}zeta, {L}zeta].
FormalChain sphere_degree_family(const SpacePreset& s, std::uint64_t L);
FormalChain sphere_hopf_family(const SpacePreset& s, std::uint64_t L);

} // namespace loopcalc
