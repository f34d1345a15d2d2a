#pragma once

// Numerical iterated integrals of the normalized S^2 area form against loop
// families: an exact geodesic solid-angle scheme for one-letter words, and a
// transport (dynamic-programming) quadrature over the time simplex for
// longer words.

#include "volume.hpp"

namespace loopcalc::geom {

// <int omega ... omega (r letters), family>; the family arity must equal r
// (degree mismatch pairs to 0 by convention). omega is the area form of mass
// one, scaled per letter by `form_weights` when given.
double chen_integral_numeric(int r, const LoopFamily& f, const GeomConfig& cfg = GeomConfig{},
                             const std::vector<double>& form_weights = {});

double chen_integral_numeric(int r, const NumericChain& c, const GeomConfig& cfg = GeomConfig{});

} // namespace loopcalc::geom
