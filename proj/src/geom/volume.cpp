#include "volume.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace loopcalc::geom {

namespace {

struct SampledLoop {
    std::vector<Vec3> pts;
    double max_seg = 0;
};

struct SweepResult {
    double value = 0;
    double padded = 0;
    double max_disp = 0;
    std::vector<double> axis_max; // largest displacement seen per axis
};

int thread_budget() {
    if (const char* env = std::getenv("LOOPCALC_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

double sup_dist(const SampledLoop& a, const SampledLoop& b) {
    double sup = 0;
    for (std::size_t i = 0; i < a.pts.size(); ++i)
        sup = std::max(sup, great_circle_dist(a.pts[i], b.pts[i]));
    return sup;
}

SampledLoop sample_at(const LoopFamily& f, const std::vector<double>& u, int samples) {
    DiscreteLoop d = sample_timeline(f.make(u), samples);
    SampledLoop s;
    s.pts = std::move(d.pts);
    s.max_seg = 0;
    for (std::size_t i = 0; i + 1 < s.pts.size(); ++i)
        s.max_seg = std::max(s.max_seg, great_circle_dist(s.pts[i], s.pts[i + 1]));
    return s;
}

// One full certified sweep at fixed per-axis resolutions. Arity <= 3; the
// grid is traversed plane-by-plane along axis 0 so only two parameter planes
// of sampled loops are resident. Deterministic reduction order.
SweepResult sweep(const LoopFamily& f, const std::vector<int>& res, int samples) {
    int k = f.arity;
    SweepResult out;
    out.axis_max.assign(static_cast<std::size_t>(k), 0.0);
    if (k == 0) {
        out.value = 1.0;
        out.padded = 1.0;
        return out;
    }

    // plane = grid over axes 1..k-1
    std::vector<int> pdims(res.begin() + 1, res.end());
    std::size_t plane_size = 1;
    for (int d : pdims) plane_size *= static_cast<std::size_t>(d) + 1;

    auto plane_coords = [&](std::size_t idx, std::vector<double>& u) {
        std::size_t rem = idx;
        for (int a = 0; a < k - 1; ++a) {
            std::size_t n = static_cast<std::size_t>(pdims[static_cast<std::size_t>(a)]) + 1;
            u[static_cast<std::size_t>(a) + 1] =
                static_cast<double>(rem % n) / pdims[static_cast<std::size_t>(a)];
            rem /= n;
        }
    };

    int nthreads = std::min(thread_budget(), 8);
    auto fill_plane = [&](int i0, std::vector<SampledLoop>& plane) {
        plane.resize(plane_size);
        auto work = [&](std::size_t lo, std::size_t hi) {
            std::vector<double> u(static_cast<std::size_t>(k), 0.0);
            u[0] = res[0] == 0 ? 0.0 : static_cast<double>(i0) / res[0];
            for (std::size_t idx = lo; idx < hi; ++idx) {
                plane_coords(idx, u);
                plane[idx] = sample_at(f, u, samples);
            }
        };
        if (nthreads <= 1 || plane_size < 64) {
            work(0, plane_size);
        } else {
            std::vector<std::thread> ts;
            std::size_t chunk = (plane_size + static_cast<std::size_t>(nthreads) - 1) /
                                static_cast<std::size_t>(nthreads);
            for (int t = 0; t < nthreads; ++t) {
                std::size_t lo = static_cast<std::size_t>(t) * chunk;
                std::size_t hi = std::min(plane_size, lo + chunk);
                if (lo >= hi) break;
                ts.emplace_back(work, lo, hi);
            }
            for (auto& t : ts) t.join();
        }
    };

    std::vector<SampledLoop> lo_plane, hi_plane;
    fill_plane(0, lo_plane);

    // strides within a plane for axes 1..k-1
    std::vector<std::size_t> stride(static_cast<std::size_t>(k), 0);
    {
        std::size_t s = 1;
        for (int a = 1; a < k; ++a) {
            stride[static_cast<std::size_t>(a)] = s;
            s *= static_cast<std::size_t>(pdims[static_cast<std::size_t>(a - 1)]) + 1;
        }
    }

    std::vector<int> cdims(res.begin(), res.end()); // cells per axis
    std::size_t cells_per_plane = 1;
    for (int a = 1; a < k; ++a) cells_per_plane *= static_cast<std::size_t>(cdims[static_cast<std::size_t>(a)]);

    for (int i0 = 0; i0 < res[0]; ++i0) {
        fill_plane(i0 + 1, hi_plane);
        for (std::size_t c = 0; c < cells_per_plane; ++c) {
            // cell base coordinates along axes 1..k-1
            std::size_t rem = c;
            std::size_t base = 0;
            for (int a = 1; a < k; ++a) {
                std::size_t n = static_cast<std::size_t>(cdims[static_cast<std::size_t>(a)]);
                std::size_t coord = rem % n;
                rem /= n;
                base += coord * stride[static_cast<std::size_t>(a)];
            }
            // 2^(k-1) corners within each plane
            int corners = 1 << (k - 1);
            double prod = 1, prod_pad = 1, pad = 0;
            for (int mask = 0; mask < corners; ++mask) {
                std::size_t off = base;
                for (int a = 1; a < k; ++a)
                    if (mask & (1 << (a - 1))) off += stride[static_cast<std::size_t>(a)];
                pad = std::max(pad, lo_plane[off].max_seg);
                pad = std::max(pad, hi_plane[off].max_seg);
            }
            for (int axis = 0; axis < k; ++axis) {
                double disp = 0;
                if (axis == 0) {
                    for (int mask = 0; mask < corners; ++mask) {
                        std::size_t off = base;
                        for (int a = 1; a < k; ++a)
                            if (mask & (1 << (a - 1))) off += stride[static_cast<std::size_t>(a)];
                        disp = std::max(disp, sup_dist(lo_plane[off], hi_plane[off]));
                    }
                } else {
                    int other = corners >> 1; // corners of the face orthogonal to `axis`
                    for (int side = 0; side < 2; ++side) {
                        const auto& plane = side ? hi_plane : lo_plane;
                        for (int mask = 0; mask < other; ++mask) {
                            std::size_t off = base;
                            int bit = 0;
                            for (int a = 1; a < k; ++a) {
                                if (a == axis) continue;
                                if (mask & (1 << bit)) off += stride[static_cast<std::size_t>(a)];
                                ++bit;
                            }
                            disp = std::max(disp, sup_dist(plane[off],
                                                           plane[off + stride[static_cast<std::size_t>(axis)]]));
                        }
                    }
                }
                out.axis_max[static_cast<std::size_t>(axis)] =
                    std::max(out.axis_max[static_cast<std::size_t>(axis)], disp);
                out.max_disp = std::max(out.max_disp, disp);
                prod *= disp;
                prod_pad *= disp + pad;
            }
            out.value += prod;
            out.padded += prod_pad;
        }
        lo_plane.swap(hi_plane);
    }
    return out;
}

} // namespace

VolumeEstimate volume_upper(const LoopFamily& f, const GeomConfig& cfg) {
    VolumeEstimate est;
    int k = f.arity;
    est.resolution.assign(static_cast<std::size_t>(std::max(k, 1)), cfg.refine_base);
    if (k == 0) {
        est.value = std::abs(f.weight);
        est.padded_value = est.value;
        est.resolution.clear();
        return est;
    }
    int samples = adapted_samples(f, cfg);

    std::vector<int> res(static_cast<std::size_t>(k), cfg.refine_base);
    std::vector<int> doublings(static_cast<std::size_t>(k), 0);
    double prev = -1;
    SweepResult sw;
    est.converged = false;
    int max_rounds = cfg.refine_cap * k + 1;
    for (int round = 0; round < max_rounds; ++round) {
        sw = sweep(f, res, samples);
        est.rounds = round + 1;
        double value = sw.value * std::abs(f.weight);
        if (prev >= 0 && std::abs(value - prev) <= cfg.refine_tol * std::max(prev, 1e-300)) {
            est.converged = true;
            prev = value;
            break;
        }
        prev = value;
        // refine the axis currently dominating the displacement profile
        int pick = -1;
        double worst = -1;
        for (int a = 0; a < k; ++a)
            if (doublings[static_cast<std::size_t>(a)] < cfg.refine_cap && sw.axis_max[static_cast<std::size_t>(a)] > worst) {
                worst = sw.axis_max[static_cast<std::size_t>(a)];
                pick = a;
            }
        if (pick < 0) break; // every axis at cap
        res[static_cast<std::size_t>(pick)] *= 2;
        ++doublings[static_cast<std::size_t>(pick)];
    }
    est.value = prev < 0 ? 0 : prev;
    est.padded_value = sw.padded * std::abs(f.weight);
    est.max_cell_distortion = sw.max_disp;
    est.resolution = res;
    return est;
}

// Chain parts carry unit family weight; the signed coefficient lives in
// WeightedFamily::weight and identical-volume siblings in multiplicity.
VolumeEstimate chain_volume_upper(const NumericChain& c, const GeomConfig& cfg) {
    VolumeEstimate total;
    total.converged = true;
    for (const auto& part : c.parts) {
        VolumeEstimate e = volume_upper(part.fam, cfg);
        double scale = part.multiplicity * std::abs(part.weight);
        total.value += scale * e.value;
        total.padded_value += scale * e.padded_value;
        total.max_cell_distortion = std::max(total.max_cell_distortion, e.max_cell_distortion);
        total.converged = total.converged && e.converged;
        total.rounds = std::max(total.rounds, e.rounds);
    }
    return total;
}

double chain_suplength(const NumericChain& c, int grid) {
    double best = 0;
    for (const auto& part : c.parts) best = std::max(best, family_suplength(part.fam, grid));
    return best;
}

} // namespace loopcalc::geom
