#pragma once

#include <string>

#include "spaces.hpp"

namespace loopcalc {

// {"degree": d, "curfew": "p/q", "terms": [{"coeff": "p/q", "word": [atom...]}]}
// Atom base is a generator id string, {"word": [...]} for an opaque scaled
// word, or {"witness": {...}} carrying the witness provenance.
std::string chain_to_json(const FormalChain& c, int indent = -1);

FormalChain chain_from_json(const SpacePreset& preset, const std::string& json,
                            const CostModel& model = CostModel{});

} // namespace loopcalc
