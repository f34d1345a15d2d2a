#include "chen_numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace loopcalc::geom {

namespace {

// One-letter words: the pairing is the (signed) area swept by the suspension
// surface (t, s) -> gamma_s(t), normalized by 4*pi. Summing geodesic-triangle
// solid angles is exact for the sampled polyline surface, so closed sweeps
// give exact integer multiples of the form mass.
double area_integral_1(const LoopFamily& f, const GeomConfig& cfg) {
    int R = cfg.resolution;
    int M = std::max(f.samples, adapted_samples(f, cfg));
    std::vector<DiscreteLoop> row(static_cast<std::size_t>(R) + 1);
    for (int j = 0; j <= R; ++j)
        row[static_cast<std::size_t>(j)] = sample_timeline(f.make({static_cast<double>(j) / R}), M);
    double total = 0;
    for (int j = 0; j < R; ++j) {
        const auto& a = row[static_cast<std::size_t>(j)].pts;
        const auto& b = row[static_cast<std::size_t>(j) + 1].pts;
        for (int i = 0; i < M; ++i) {
            auto p00 = a[static_cast<std::size_t>(i)], p10 = a[static_cast<std::size_t>(i) + 1];
            auto p01 = b[static_cast<std::size_t>(i)], p11 = b[static_cast<std::size_t>(i) + 1];
            total += solid_angle(p00, p10, p11) + solid_angle(p00, p11, p01);
        }
    }
    return f.weight * total / (4.0 * M_PI);
}

// Transport quadrature for r >= 2 over one parameter cell: j-forms on the
// parameter cube are antisymmetric tensors indexed by axis subsets; the
// iterated integral is the top component of F_r at t = 1 with
// F_j(t) = int_{t' < t} F_{j-1}(t') ^ omega_j(d gamma(t')).
struct CellCorners {
    std::vector<const DiscreteLoop*> loops; // 2^k corners, bit a = axis a high
};

double transport_cell(int r, int k, const CellCorners& cell, int M, double h,
                      const std::vector<double>& fw) {
    const int nsub = 1 << k;
    std::vector<double> F((static_cast<std::size_t>(r) + 1) * static_cast<std::size_t>(nsub), 0.0);
    auto at = [&](int j, int mask) -> double& {
        return F[static_cast<std::size_t>(j) * static_cast<std::size_t>(nsub) + static_cast<std::size_t>(mask)];
    };
    at(0, 0) = 1.0;

    const int corners = 1 << k;
    std::vector<Vec3> mid(static_cast<std::size_t>(M) + 1);
    for (int i = 0; i <= M; ++i) {
        Vec3 acc{0, 0, 0};
        for (int c = 0; c < corners; ++c) acc = acc + cell.loops[static_cast<std::size_t>(c)]->pts[static_cast<std::size_t>(i)];
        mid[static_cast<std::size_t>(i)] = (1.0 / corners) * acc;
    }

    for (int i = 0; i < M; ++i) {
        // dt and ds_a displacement vectors at the midpoint of step i
        Vec3 dt = mid[static_cast<std::size_t>(i) + 1] - mid[static_cast<std::size_t>(i)];
        Vec3 p = normalized(0.5 * (mid[static_cast<std::size_t>(i)] + mid[static_cast<std::size_t>(i) + 1]));
        std::vector<Vec3> ds(static_cast<std::size_t>(k));
        for (int a = 0; a < k; ++a) {
            Vec3 hi{0, 0, 0}, lo{0, 0, 0};
            for (int c = 0; c < corners; ++c) {
                const Vec3& q0 = cell.loops[static_cast<std::size_t>(c)]->pts[static_cast<std::size_t>(i)];
                const Vec3& q1 = cell.loops[static_cast<std::size_t>(c)]->pts[static_cast<std::size_t>(i) + 1];
                Vec3 avg = 0.5 * (q0 + q1);
                if (c & (1 << a))
                    hi = hi + avg;
                else
                    lo = lo + avg;
            }
            ds[static_cast<std::size_t>(a)] = (2.0 / corners) * (hi - lo);
        }
        // omega(dt, ds_a) at p: area form = p . (dt x ds_a) / (4 pi)
        std::vector<double> eps(static_cast<std::size_t>(k));
        for (int a = 0; a < k; ++a)
            eps[static_cast<std::size_t>(a)] = dot(p, cross(dt, ds[static_cast<std::size_t>(a)])) / (4.0 * M_PI);

        for (int j = r; j >= 1; --j) {
            double w = fw.empty() ? 1.0 : fw[static_cast<std::size_t>(j) - 1];
            for (int mask = 0; mask < nsub; ++mask) {
                if (at(j - 1, mask) == 0.0) continue;
                double base = at(j - 1, mask) * w;
                for (int a = 0; a < k; ++a) {
                    if (mask & (1 << a)) continue;
                    // wedge sign: ds_a appended past the axes already in mask
                    // that are greater than a
                    int higher = mask >> (a + 1);
                    int swaps = __builtin_popcount(static_cast<unsigned>(higher));
                    double sgn = (swaps % 2) ? -1.0 : 1.0;
                    at(j, mask | (1 << a)) += sgn * base * eps[static_cast<std::size_t>(a)];
                }
            }
        }
    }
    double cellvol = 1;
    for (int a = 0; a < k; ++a) cellvol *= h;
    (void)cellvol; // ds vectors already carry the cell widths
    return at(r, nsub - 1);
}

double area_integral_r(int r, const LoopFamily& f, const GeomConfig& cfg, const std::vector<double>& fw) {
    int k = f.arity;
    // modest grid: the transport scheme is O(R^k * M * r * 2^k)
    int R = std::max(8, cfg.resolution / (k >= 3 ? 4 : 1));
    int M = std::max(f.samples, adapted_samples(f, cfg));
    const int corners = 1 << k;

    // full sampled grid (r >= 2 is used at modest resolutions only)
    std::vector<int> dims(static_cast<std::size_t>(k), R + 1);
    std::size_t total = 1;
    for (int a = 0; a < k; ++a) total *= static_cast<std::size_t>(R) + 1;
    std::vector<DiscreteLoop> grid(total);
    std::vector<double> u(static_cast<std::size_t>(k));
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rem = idx;
        for (int a = 0; a < k; ++a) {
            u[static_cast<std::size_t>(a)] = static_cast<double>(rem % (static_cast<std::size_t>(R) + 1)) / R;
            rem /= static_cast<std::size_t>(R) + 1;
        }
        grid[idx] = sample_timeline(f.make(u), M);
    }
    std::vector<std::size_t> stride(static_cast<std::size_t>(k));
    std::size_t s = 1;
    for (int a = 0; a < k; ++a) {
        stride[static_cast<std::size_t>(a)] = s;
        s *= static_cast<std::size_t>(R) + 1;
    }

    double totalint = 0;
    std::size_t cells = 1;
    for (int a = 0; a < k; ++a) cells *= static_cast<std::size_t>(R);
    for (std::size_t c = 0; c < cells; ++c) {
        std::size_t rem = c, base = 0;
        for (int a = 0; a < k; ++a) {
            base += (rem % static_cast<std::size_t>(R)) * stride[static_cast<std::size_t>(a)];
            rem /= static_cast<std::size_t>(R);
        }
        CellCorners cc;
        cc.loops.resize(static_cast<std::size_t>(corners));
        for (int m = 0; m < corners; ++m) {
            std::size_t off = base;
            for (int a = 0; a < k; ++a)
                if (m & (1 << a)) off += stride[static_cast<std::size_t>(a)];
            cc.loops[static_cast<std::size_t>(m)] = &grid[off];
        }
        totalint += transport_cell(r, k, cc, M, 1.0 / R, fw);
    }
    return f.weight * totalint;
}

} // namespace

double chen_integral_numeric(int r, const LoopFamily& f, const GeomConfig& cfg,
                             const std::vector<double>& form_weights) {
    if (r < 0) throw std::invalid_argument("chen_integral_numeric: r must be >= 0");
    if (r != f.arity) return 0.0; // dimension convention
    if (r == 0) return f.weight;
    if (r == 1) {
        double w = form_weights.empty() ? 1.0 : form_weights[0];
        return w * area_integral_1(f, cfg);
    }
    return area_integral_r(r, f, cfg, form_weights);
}

double chen_integral_numeric(int r, const NumericChain& c, const GeomConfig& cfg) {
    double total = 0;
    for (const auto& part : c.parts)
        if (part.fam.arity == r) total += part.weight * part.multiplicity * chen_integral_numeric(r, part.fam, cfg);
    return total;
}

} // namespace loopcalc::geom
