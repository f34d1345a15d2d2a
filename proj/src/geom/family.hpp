#pragma once

// Discretized based-loop families on S^2. A loop is described by a segment
// timeline (sweepout blocks, possibly wrap-repeated, and constant-loop
// padding); families map parameter points in [0,1]^k to timelines and are
// sampled to uniform time grids on demand.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sphere.hpp"

namespace loopcalc::geom {

struct Segment {
    enum class Kind : std::uint8_t { konst, sweep };
    Kind kind = Kind::konst;
    double t0 = 0, t1 = 1; // normalized span within the loop
    double u = 0;          // sweep parameter
    std::uint64_t wraps = 1;
    bool based = false; // based (capped) sweepout formula
    double cap = 0.125;
};

struct LoopTimeline {
    double curfew = 1;
    std::vector<Segment> segs; // sorted, covering [0,1]

    Vec3 eval(double t) const;
};

struct DiscreteLoop {
    double curfew = 1;
    std::vector<Vec3> pts; // M+1 samples, first = last = north pole

    double length() const;
    double max_seg() const; // largest great-circle gap between neighbors
};

// Sup metric plus curfew difference; requires equal sample counts.
double loop_distance(const DiscreteLoop& a, const DiscreteLoop& b);

DiscreteLoop sample_timeline(const LoopTimeline& tl, int samples);
DiscreteLoop resample(const DiscreteLoop& loop, int samples);

// Exact-per-wrap polyline length of the timeline (scales exactly under
// wrap-powers regardless of the uniform sampling density).
double timeline_length(const LoopTimeline& tl, int per_wrap_samples = 256);

class LoopFamily {
public:
    int arity = 0;
    double curfew = 1;
    double weight = 1;
    int samples = 256; // uniform time grid resolution for sampling
    std::string tag;
    std::function<LoopTimeline(const std::vector<double>&)> make;

    DiscreteLoop at(const std::vector<double>& params) const { return sample_timeline(make(params), samples); }
};

struct GeomConfig {
    int resolution = 64;        // default parameter grid resolution
    int samples = 256;          // default time samples
    int per_wrap_samples = 8;   // adaptive floor for heavily wrapped loops
    int max_samples = 4096;
    double based_cap = 0.125;
    int refine_base = 8;   // volume refinement ladder starts here
    int refine_cap = 4;    // dyadic doublings per axis
    double refine_tol = 1e-2;
};

// The spec sweepout: gamma_s descends the meridian at longitude 2*pi*s and
// returns up meridian 0; curfew 1.
LoopFamily sweepout_s2(const GeomConfig& cfg = GeomConfig{});

// Based representative of the same generator (constant basepoint loop);
// required by the bouquet endpoints and the time-shift homotopies.
LoopFamily based_sweepout_s2(const GeomConfig& cfg = GeomConfig{});

LoopFamily constant_family(int arity, double curfew, const GeomConfig& cfg = GeomConfig{});

LoopFamily concat(const LoopFamily& f1, const LoopFamily& f2, const GeomConfig& cfg = GeomConfig{});
LoopFamily power(std::uint64_t k, const LoopFamily& f, const GeomConfig& cfg = GeomConfig{});

// Restrict one parameter axis to 0 or 1.
LoopFamily face(const LoopFamily& f, int axis, int side);

// Max loop length over the sampled parameter grid.
double family_suplength(const LoopFamily& f, int grid = 32);

std::string family_to_json(const LoopFamily& f, int grid_resolution);

std::uint64_t timeline_total_wraps(const LoopTimeline& tl);

// Uniform sample count adapted to the wrap count, capped.
int adapted_samples(const LoopFamily& f, const GeomConfig& cfg);

} // namespace loopcalc::geom
