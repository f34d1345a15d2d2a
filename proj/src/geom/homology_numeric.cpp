#include "homology_numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "../rational.hpp"

namespace loopcalc::geom {

namespace {

double d2b_lo(double sigma, double u) { return (1 - sigma) * u + sigma * std::min(2 * u, 1.0); }
double d2b_hi(double sigma, double u) { return (1 - sigma) * u + sigma * std::max(2 * u - 1, 0.0); }

struct Block {
    bool sweep = true;
    double u = 0;
    std::uint64_t wraps = 1;
    double dur = 1;    // curfew units
    double offset = 0; // start, curfew units
};

// Lay blocks on [0, curfew], fill gaps with constant segments, then repeat
// the whole pattern `outer` times.
LoopTimeline place_blocks(double curfew, std::vector<Block> blocks, std::uint64_t outer, double cap) {
    LoopTimeline base;
    base.curfew = curfew;
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) { return a.offset < b.offset; });
    double t = 0;
    auto push_const = [&](double from, double to) {
        if (to - from <= 1e-12) return;
        Segment s;
        s.kind = Segment::Kind::konst;
        s.t0 = from / curfew;
        s.t1 = to / curfew;
        base.segs.push_back(s);
    };
    for (const Block& b : blocks) {
        push_const(t, b.offset);
        Segment s;
        s.kind = b.sweep ? Segment::Kind::sweep : Segment::Kind::konst;
        s.t0 = b.offset / curfew;
        s.t1 = (b.offset + b.dur) / curfew;
        s.u = std::clamp(b.u, 0.0, 1.0);
        s.wraps = b.wraps;
        s.based = true;
        s.cap = cap;
        base.segs.push_back(s);
        t = b.offset + b.dur;
    }
    push_const(t, curfew);
    if (outer <= 1) return base;
    LoopTimeline tl;
    tl.curfew = curfew * static_cast<double>(outer);
    double step = 1.0 / static_cast<double>(outer);
    for (std::uint64_t i = 0; i < outer; ++i)
        for (Segment s : base.segs) {
            s.t0 = (static_cast<double>(i) + s.t0) * step;
            s.t1 = (static_cast<double>(i) + s.t1) * step;
            tl.segs.push_back(s);
        }
    return tl;
}

LoopFamily piece_family(int arity, double curfew, int samples, std::string tag,
                        std::function<LoopTimeline(const std::vector<double>&)> make) {
    LoopFamily f;
    f.arity = arity;
    f.curfew = curfew;
    f.weight = 1;
    f.samples = samples;
    f.tag = std::move(tag);
    f.make = std::move(make);
    return f;
}

// Slide homotopy: active blocks interpolate between two slot layouts while
// padding stays constant; exactly the piecewise-linear time reparametrization
// of the lemma's H_s.
struct SlideSpec {
    // (which input u drives the block, wraps, dur, offset at sigma=0, offset at sigma=1)
    struct Item {
        int input; // 0 -> u1, 1 -> u2
        std::uint64_t wraps;
        double dur, off0, off1;
    };
    std::vector<Item> items;
};

LoopFamily slide_family(double curfew, const SlideSpec& spec, std::uint64_t outer, int samples,
                        double cap, const std::string& tag) {
    return piece_family(3, curfew * static_cast<double>(outer), samples, tag,
                        [curfew, spec, outer, cap](const std::vector<double>& u) {
                            double sigma = u.at(2);
                            std::vector<Block> blocks;
                            for (const auto& it : spec.items) {
                                Block b;
                                b.sweep = true;
                                b.u = it.input == 0 ? u.at(0) : u.at(1);
                                b.wraps = it.wraps;
                                b.dur = it.dur;
                                b.offset = (1 - sigma) * it.off0 + sigma * it.off1;
                                blocks.push_back(b);
                            }
                            return place_blocks(curfew, std::move(blocks), outer, cap);
                        });
}

int scaled_samples(const GeomConfig& cfg, std::uint64_t total_wraps) {
    std::uint64_t want = std::max<std::uint64_t>(
        static_cast<std::uint64_t>(cfg.samples),
        total_wraps * static_cast<std::uint64_t>(cfg.per_wrap_samples));
    return static_cast<int>(std::min<std::uint64_t>(want, static_cast<std::uint64_t>(cfg.max_samples)));
}

} // namespace

NumericChain build_p_numeric(std::uint64_t L, const GeomConfig& cfg) {
    if (!loopcalc::is_power_of_two(L))
        throw std::invalid_argument("build_p_numeric: L must be a power of two");
    NumericChain out;
    out.curfew = 2.0 * static_cast<double>(L);
    if (L == 1) return out;
    unsigned k = loopcalc::log2_exact(L);
    double cap = cfg.based_cap;

    for (unsigned i = 0; i < k; ++i) {
        std::uint64_t m = std::uint64_t(1) << (k - 1 - i);
        std::uint64_t w = std::uint64_t(1) << i;
        double dm = static_cast<double>(m);
        double weight = static_cast<double>(w);
        int samples = scaled_samples(cfg, 4 * m * w);
        std::string sc = "i" + std::to_string(i);

        // P1: [{2m}Z(u1), D2B pair(u2)] and [D2B pair(u1), Z(u2) with padding]
        out.parts.push_back({piece_family(3, 4 * dm * weight, samples, "P1a@" + sc,
                                          [dm, m, w, cap](const std::vector<double>& u) {
                                              double s = u.at(2);
                                              std::vector<Block> b = {
                                                  {true, u.at(0), 2 * m, 2 * dm, 0},
                                                  {true, d2b_lo(s, u.at(1)), m, dm, 2 * dm},
                                                  {true, d2b_hi(s, u.at(1)), m, dm, 3 * dm}};
                                              return place_blocks(4 * dm, std::move(b), w, cap);
                                          }),
                             weight, 2, "P1a@" + sc});
        out.parts.push_back({piece_family(3, 4 * dm * weight, samples, "P1b@" + sc,
                                          [dm, m, w, cap](const std::vector<double>& u) {
                                              double s = u.at(2);
                                              std::vector<Block> b = {
                                                  {true, d2b_lo(s, u.at(0)), m, dm, 0},
                                                  {true, d2b_hi(s, u.at(0)), m, dm, dm},
                                                  {true, u.at(1), m, dm, 2 * dm}};
                                              return place_blocks(4 * dm, std::move(b), w, cap);
                                          }),
                             weight, 4, "P1b@" + sc});

        // P2 over Q1: four distinct slide profiles, each for two bracket orders
        struct Profile {
            double z1_0, z1_1, z2_0, z2_1;
            const char* name;
        };
        const Profile q1[] = {{0, 0, 2, 1, "P2q1a"},
                              {0, 0, 3, 1, "P2q1b"},
                              {1, 0, 2, 1, "P2q1c"},
                              {1, 0, 3, 1, "P2q1d"}};
        for (const auto& pr : q1) {
            SlideSpec spec;
            spec.items = {{0, m, dm, pr.z1_0 * dm, pr.z1_1 * dm},
                          {1, m, dm, pr.z2_0 * dm, pr.z2_1 * dm}};
            out.parts.push_back({slide_family(4 * dm, spec, w, samples, cap, std::string(pr.name) + "@" + sc),
                                 weight, 2, std::string(pr.name) + "@" + sc});
        }

        // P3: four-factor bouquet homotopy on the torus diagonal
        out.parts.push_back({piece_family(3, 4 * dm * weight, samples, "P3@" + sc,
                                          [dm, m, w, cap](const std::vector<double>& u) {
                                              double s = u.at(2);
                                              double x1, y1, x2, y2;
                                              if (s <= 0.5) {
                                                  double sp = 2 * s;
                                                  x1 = d2b_lo(sp, u.at(0));
                                                  y1 = u.at(1);
                                                  x2 = d2b_hi(sp, u.at(0));
                                                  y2 = u.at(1);
                                              } else {
                                                  double sp = 2 * s - 1;
                                                  x1 = std::min(2 * u.at(0), 1.0);
                                                  y1 = d2b_lo(sp, u.at(1));
                                                  x2 = std::max(2 * u.at(0) - 1, 0.0);
                                                  y2 = d2b_hi(sp, u.at(1));
                                              }
                                              std::vector<Block> b = {{true, x1, m, dm, 0},
                                                                      {true, y1, m, dm, dm},
                                                                      {true, x2, m, dm, 2 * dm},
                                                                      {true, y2, m, dm, 3 * dm}};
                                              return place_blocks(4 * dm, std::move(b), w, cap);
                                          }),
                             2 * weight, 2, "P3@" + sc});

        // P2 over Q2: the three non-trivial consolidations
        const Profile q2[] = {{0, 0, 3, 1, "P2q2a"}, {2, 1, 1, 0, "P2q2b"}, {2, 0, 3, 1, "P2q2c"}};
        for (const auto& pr : q2) {
            SlideSpec spec;
            spec.items = {{0, m, dm, pr.z1_0 * dm, pr.z1_1 * dm},
                          {1, m, dm, pr.z2_0 * dm, pr.z2_1 * dm}};
            out.parts.push_back({slide_family(4 * dm, spec, w, samples, cap, std::string(pr.name) + "@" + sc),
                                 2 * weight, 2, std::string(pr.name) + "@" + sc});
        }
    }
    return out;
}

NumericChain build_p_naive_numeric(std::uint64_t L, const GeomConfig& cfg) {
    if (L == 0) throw std::invalid_argument("build_p_naive_numeric: L must be >= 1");
    NumericChain out;
    out.curfew = 2.0 * static_cast<double>(L);
    if (L == 1) return out;
    double cap = cfg.based_cap;
    double dl = static_cast<double>(L);
    int samples = scaled_samples(cfg, 2 * L);

    // full-scale diagonal-to-bouquet split of factor 1 against {L}Z2
    out.parts.push_back({piece_family(3, 2 * dl, samples, "Nsplit",
                                      [L, dl, cap](const std::vector<double>& u) {
                                          double s = u.at(2);
                                          std::vector<Block> b;
                                          for (std::uint64_t p = 0; p < L; ++p) {
                                              double phi = (1 - s) * u.at(0) +
                                                           s * std::clamp(dl * u.at(0) - static_cast<double>(p),
                                                                          0.0, 1.0);
                                              b.push_back({true, phi, 1, 1, static_cast<double>(p)});
                                          }
                                          b.push_back({true, u.at(1), L, dl, dl});
                                          return place_blocks(2 * dl, std::move(b), 1, cap);
                                      }),
                         1, 2, "Nsplit"});

    // slides: translate p moves home across p-1 slots at full suplength
    for (std::uint64_t p = 2; p <= L; ++p) {
        SlideSpec spec;
        spec.items = {{0, 1, 1, static_cast<double>(p - 1), 0}, {1, L, dl, dl, dl}};
        out.parts.push_back({slide_family(2 * dl, spec, 1, samples, cap, "Nslide" + std::to_string(p)),
                             1, 4, "Nslide" + std::to_string(p)});
    }

    // {L}-wrapped unit-scale consolidation closers (weight L, volume O(L))
    const struct {
        double z1_0, z1_1, z2_0, z2_1;
        const char* name;
    } closers[] = {{0, 0, 3, 1, "Nclose_a"}, {2, 1, 1, 0, "Nclose_b"}, {2, 0, 3, 1, "Nclose_c"}};
    int closer_samples = scaled_samples(cfg, 4 * L);
    for (const auto& pr : closers) {
        SlideSpec spec;
        spec.items = {{0, 1, 1, pr.z1_0, pr.z1_1}, {1, 1, 1, pr.z2_0, pr.z2_1}};
        out.parts.push_back({slide_family(4, spec, L, closer_samples, cap, pr.name),
                             static_cast<double>(L), 2, pr.name});
    }
    return out;
}

LoopFamily bracket_endpoint_family(std::uint64_t L, const GeomConfig& cfg) {
    LoopFamily z = based_sweepout_s2(cfg);
    return concat(power(L, z, cfg), power(L, z, cfg), cfg);
}

LoopFamily rescaled_endpoint_family(std::uint64_t L, const GeomConfig& cfg) {
    LoopFamily z = based_sweepout_s2(cfg);
    return power(L, concat(z, z, cfg), cfg);
}

} // namespace loopcalc::geom
