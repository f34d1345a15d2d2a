#pragma once

// Certified volume upper bounds for loop families: sum over parameter cells
// of the product over axes of the largest directional sup-metric displacement
// across the cell, refined dyadically (per axis) until stable.

#include "family.hpp"

namespace loopcalc::geom {

struct VolumeEstimate {
    double value = 0;        // certified bound for the sampled family
    double padded_value = 0; // with per-segment Lipschitz sampling padding
    double max_cell_distortion = 0;
    bool converged = true;
    int rounds = 0;
    std::vector<int> resolution; // final per-axis grid
};

VolumeEstimate volume_upper(const LoopFamily& f, const GeomConfig& cfg = GeomConfig{});

struct WeightedFamily {
    LoopFamily fam;
    double weight = 1;       // signed chain coefficient
    double multiplicity = 1; // identical-volume siblings folded in
    std::string tag;
};

struct NumericChain {
    std::vector<WeightedFamily> parts;
    double curfew = 0;
};

// Sum of |weight| * multiplicity * volume_upper over the parts.
VolumeEstimate chain_volume_upper(const NumericChain& c, const GeomConfig& cfg = GeomConfig{});

double chain_suplength(const NumericChain& c, int grid = 16);

} // namespace loopcalc::geom
