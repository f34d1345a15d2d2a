#include "family.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace loopcalc::geom {

namespace {

Vec3 eval_segment(const Segment& s, double local) {
    if (s.kind == Segment::Kind::konst) return north_pole();
    double tau = local * static_cast<double>(s.wraps);
    tau -= std::floor(tau);
    if (local >= 1.0) tau = 1.0; // endpoint hits the basepoint exactly
    return s.based ? based_sweep_point(s.u, tau, s.cap) : sweep_point(s.u, tau);
}

} // namespace

Vec3 LoopTimeline::eval(double t) const {
    if (segs.empty()) return north_pole();
    // binary search for the segment containing t
    std::size_t lo = 0, hi = segs.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi + 1) / 2;
        if (segs[mid].t0 <= t)
            lo = mid;
        else
            hi = mid - 1;
    }
    const Segment& s = segs[lo];
    double span = s.t1 - s.t0;
    double local = span <= 0 ? 0.0 : (t - s.t0) / span;
    local = std::clamp(local, 0.0, 1.0);
    return eval_segment(s, local);
}

double DiscreteLoop::length() const {
    double len = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) len += great_circle_dist(pts[i], pts[i + 1]);
    return len;
}

double DiscreteLoop::max_seg() const {
    double m = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        m = std::max(m, great_circle_dist(pts[i], pts[i + 1]));
    return m;
}

double loop_distance(const DiscreteLoop& a, const DiscreteLoop& b) {
    if (a.pts.size() != b.pts.size())
        throw std::invalid_argument("loop_distance: sample counts differ (" +
                                    std::to_string(a.pts.size()) + " vs " + std::to_string(b.pts.size()) + ")");
    double sup = 0;
    for (std::size_t i = 0; i < a.pts.size(); ++i)
        sup = std::max(sup, great_circle_dist(a.pts[i], b.pts[i]));
    return std::abs(a.curfew - b.curfew) + sup;
}

DiscreteLoop sample_timeline(const LoopTimeline& tl, int samples) {
    DiscreteLoop out;
    out.curfew = tl.curfew;
    out.pts.resize(static_cast<std::size_t>(samples) + 1);
    // Per-segment wrap tables keep the cost proportional to the wrap count
    // only through cheap interpolation, not trig.
    std::size_t i = 0;
    for (const Segment& s : tl.segs) {
        double span = s.t1 - s.t0;
        std::size_t i_end = static_cast<std::size_t>(std::floor(s.t1 * samples + 1e-9));
        i_end = std::min(i_end, static_cast<std::size_t>(samples));
        if (s.kind == Segment::Kind::konst) {
            for (; i <= i_end; ++i) out.pts[i] = north_pole();
            continue;
        }
        constexpr int table_n = 64;
        std::array<Vec3, table_n + 1> table;
        for (int j = 0; j <= table_n; ++j) {
            double tau = static_cast<double>(j) / table_n;
            table[static_cast<std::size_t>(j)] =
                s.based ? based_sweep_point(s.u, tau, s.cap) : sweep_point(s.u, tau);
        }
        for (; i <= i_end; ++i) {
            double t = static_cast<double>(i) / samples;
            double local = span <= 0 ? 0.0 : std::clamp((t - s.t0) / span, 0.0, 1.0);
            double tau = local * static_cast<double>(s.wraps);
            tau -= std::floor(tau);
            if (local >= 1.0) tau = 1.0;
            double x = tau * table_n;
            int j = std::min(static_cast<int>(x), table_n - 1);
            out.pts[i] = slerp(table[static_cast<std::size_t>(j)], table[static_cast<std::size_t>(j) + 1],
                               x - j);
        }
    }
    for (; i < out.pts.size(); ++i) out.pts[i] = north_pole();
    out.pts.front() = north_pole();
    out.pts.back() = north_pole();
    return out;
}

DiscreteLoop resample(const DiscreteLoop& loop, int samples) {
    DiscreteLoop out;
    out.curfew = loop.curfew;
    out.pts.resize(static_cast<std::size_t>(samples) + 1);
    std::size_t m = loop.pts.size() - 1;
    for (int i = 0; i <= samples; ++i) {
        double x = static_cast<double>(i) / samples * static_cast<double>(m);
        std::size_t j = std::min(static_cast<std::size_t>(x), m - 1);
        out.pts[static_cast<std::size_t>(i)] = slerp(loop.pts[j], loop.pts[j + 1], x - static_cast<double>(j));
    }
    out.pts.front() = north_pole();
    out.pts.back() = north_pole();
    return out;
}

double timeline_length(const LoopTimeline& tl, int per_wrap_samples) {
    double len = 0;
    for (const Segment& s : tl.segs) {
        if (s.kind == Segment::Kind::konst) continue;
        double one = 0;
        Vec3 prev = eval_segment(Segment{s.kind, 0, 1, s.u, 1, s.based, s.cap}, 0.0);
        for (int j = 1; j <= per_wrap_samples; ++j) {
            Vec3 cur = eval_segment(Segment{s.kind, 0, 1, s.u, 1, s.based, s.cap},
                                    static_cast<double>(j) / per_wrap_samples);
            one += great_circle_dist(prev, cur);
            prev = cur;
        }
        len += one * static_cast<double>(s.wraps);
    }
    return len;
}

std::uint64_t timeline_total_wraps(const LoopTimeline& tl) {
    std::uint64_t w = 0;
    for (const Segment& s : tl.segs)
        if (s.kind == Segment::Kind::sweep) w += s.wraps;
    return w;
}

int adapted_samples(const LoopFamily& f, const GeomConfig& cfg) {
    std::vector<double> mid(static_cast<std::size_t>(f.arity), 0.5);
    std::uint64_t wraps = timeline_total_wraps(f.make(mid));
    std::uint64_t want = std::max<std::uint64_t>(
        static_cast<std::uint64_t>(cfg.samples),
        wraps * static_cast<std::uint64_t>(cfg.per_wrap_samples));
    return static_cast<int>(std::min<std::uint64_t>(want, static_cast<std::uint64_t>(cfg.max_samples)));
}

LoopFamily sweepout_s2(const GeomConfig& cfg) {
    LoopFamily f;
    f.arity = 1;
    f.curfew = 1;
    f.samples = cfg.samples;
    f.tag = "sweepout";
    f.make = [](const std::vector<double>& u) {
        LoopTimeline tl;
        tl.curfew = 1;
        tl.segs = {Segment{Segment::Kind::sweep, 0, 1, u.at(0), 1, false, 0}};
        return tl;
    };
    return f;
}

LoopFamily based_sweepout_s2(const GeomConfig& cfg) {
    LoopFamily f;
    f.arity = 1;
    f.curfew = 1;
    f.samples = cfg.samples;
    f.tag = "based_sweepout";
    double cap = cfg.based_cap;
    f.make = [cap](const std::vector<double>& u) {
        LoopTimeline tl;
        tl.curfew = 1;
        tl.segs = {Segment{Segment::Kind::sweep, 0, 1, u.at(0), 1, true, cap}};
        return tl;
    };
    return f;
}

LoopFamily constant_family(int arity, double curfew, const GeomConfig& cfg) {
    LoopFamily f;
    f.arity = arity;
    f.curfew = curfew;
    f.samples = cfg.samples;
    f.tag = "constant";
    f.make = [curfew](const std::vector<double>&) {
        LoopTimeline tl;
        tl.curfew = curfew;
        tl.segs = {Segment{}};
        tl.segs[0].t0 = 0;
        tl.segs[0].t1 = 1;
        return tl;
    };
    return f;
}

LoopFamily concat(const LoopFamily& f1, const LoopFamily& f2, const GeomConfig& cfg) {
    LoopFamily out;
    out.arity = f1.arity + f2.arity;
    out.curfew = f1.curfew + f2.curfew;
    out.weight = f1.weight * f2.weight;
    out.samples = static_cast<int>(
        std::min<std::int64_t>(f1.samples + f2.samples, cfg.max_samples));
    out.tag = f1.tag + "." + f2.tag;
    int k1 = f1.arity;
    auto m1 = f1.make, m2 = f2.make;
    double c1 = f1.curfew, c2 = f2.curfew;
    out.make = [m1, m2, k1, c1, c2](const std::vector<double>& u) {
        std::vector<double> u1(u.begin(), u.begin() + k1);
        std::vector<double> u2(u.begin() + k1, u.end());
        LoopTimeline a = m1(u1), b = m2(u2);
        LoopTimeline tl;
        tl.curfew = c1 + c2;
        double r1 = c1 / tl.curfew;
        for (Segment s : a.segs) {
            s.t0 *= r1;
            s.t1 *= r1;
            tl.segs.push_back(s);
        }
        for (Segment s : b.segs) {
            s.t0 = r1 + s.t0 * (1 - r1);
            s.t1 = r1 + s.t1 * (1 - r1);
            tl.segs.push_back(s);
        }
        return tl;
    };
    return out;
}

LoopFamily power(std::uint64_t k, const LoopFamily& f, const GeomConfig& cfg) {
    if (k == 0) throw std::invalid_argument("power: k must be >= 1");
    if (k == 1) return f;
    LoopFamily out = f;
    out.curfew = f.curfew * static_cast<double>(k);
    out.samples = static_cast<int>(std::min<std::uint64_t>(
        static_cast<std::uint64_t>(f.samples) * k, static_cast<std::uint64_t>(cfg.max_samples)));
    out.tag = "{" + std::to_string(k) + "}" + f.tag;
    auto m = f.make;
    double curfew = out.curfew;
    out.make = [m, k, curfew](const std::vector<double>& u) {
        LoopTimeline base = m(u);
        LoopTimeline tl;
        tl.curfew = curfew;
        if (base.segs.size() == 1 && base.segs[0].t0 == 0 && base.segs[0].t1 == 1) {
            Segment s = base.segs[0];
            if (s.kind == Segment::Kind::sweep) {
                s.wraps *= k;
                tl.segs = {s};
                return tl;
            }
        }
        double step = 1.0 / static_cast<double>(k);
        for (std::uint64_t i = 0; i < k; ++i)
            for (Segment s : base.segs) {
                s.t0 = (static_cast<double>(i) + s.t0) * step;
                s.t1 = (static_cast<double>(i) + s.t1) * step;
                tl.segs.push_back(s);
            }
        return tl;
    };
    return out;
}

LoopFamily face(const LoopFamily& f, int axis, int side) {
    if (axis < 0 || axis >= f.arity) throw std::invalid_argument("face: axis out of range");
    LoopFamily out = f;
    out.arity = f.arity - 1;
    out.tag = f.tag + (side ? "|hi" : "|lo") + std::to_string(axis);
    auto m = f.make;
    out.make = [m, axis, side](const std::vector<double>& u) {
        std::vector<double> full(u.begin(), u.begin() + axis);
        full.push_back(side ? 1.0 : 0.0);
        full.insert(full.end(), u.begin() + axis, u.end());
        return m(full);
    };
    return out;
}

double family_suplength(const LoopFamily& f, int grid) {
    double best = 0;
    int total = 1;
    for (int a = 0; a < f.arity; ++a) total *= grid + 1;
    std::vector<double> u(static_cast<std::size_t>(f.arity), 0.0);
    for (int idx = 0; idx < total; ++idx) {
        int rem = idx;
        for (int a = 0; a < f.arity; ++a) {
            u[static_cast<std::size_t>(a)] = static_cast<double>(rem % (grid + 1)) / grid;
            rem /= grid + 1;
        }
        best = std::max(best, timeline_length(f.make(u)));
    }
    if (f.arity == 0) best = timeline_length(f.make({}));
    return best;
}

std::string family_to_json(const LoopFamily& f, int grid_resolution) {
    std::ostringstream os;
    os.precision(17);
    os << "{\"format_version\":1,\"arity\":" << f.arity << ",\"curfew\":" << f.curfew
       << ",\"weight\":" << f.weight << ",\"resolution\":" << grid_resolution
       << ",\"samples\":" << f.samples << ",\"grid\":[";
    int total = 1;
    for (int a = 0; a < f.arity; ++a) total *= grid_resolution + 1;
    std::vector<double> u(static_cast<std::size_t>(f.arity), 0.0);
    for (int idx = 0; idx < total; ++idx) {
        int rem = idx;
        for (int a = 0; a < f.arity; ++a) {
            u[static_cast<std::size_t>(a)] = static_cast<double>(rem % (grid_resolution + 1)) / grid_resolution;
            rem /= grid_resolution + 1;
        }
        DiscreteLoop loop = f.at(u);
        if (idx) os << ",";
        os << "[";
        for (std::size_t i = 0; i < loop.pts.size(); ++i) {
            if (i) os << ",";
            os << "[" << loop.pts[i].x << "," << loop.pts[i].y << "," << loop.pts[i].z << "]";
        }
        os << "]";
    }
    os << "]}";
    return os.str();
}

} // namespace loopcalc::geom
