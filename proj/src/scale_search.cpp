#include "simcorr/scale_search.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "simcorr/centering.hpp"
#include "simcorr/distance.hpp"

namespace simcorr {

namespace detail {

CenteredStats axis_stats(const PackedSym& u, double scale, KernelFamily family) {
    const PairwiseMatrix k = kernel_from_power(u, scale, family);
    return triple_center_stats(k.m);
}

namespace {

int default_block_nodes(const PackedSym& u, size_t total_nodes) {
    const size_t budget_doubles = (256u << 20) / sizeof(double);  // ~256 MB
    const size_t per_node = u.packed_size() > 0 ? u.packed_size() : 1;
    size_t b = budget_doubles / per_node;
    if (b < 1) b = 1;
    if (b > total_nodes) b = total_nodes;
    return static_cast<int>(b);
}

}  // namespace

ScanResult scan_nodes(const PackedSym& u_x, const PackedSym& u_y,
                      const std::vector<double>& lx_nodes, const std::vector<double>& ly_nodes,
                      KernelFamily family, int block_nodes) {
    const size_t gx = lx_nodes.size();
    const size_t gy = ly_nodes.size();
    ScanResult res;
    res.samples.resize(gx * gy);
    if (gx == 0 || gy == 0) return res;

    if (block_nodes <= 0) block_nodes = default_block_nodes(u_x, gx);

    std::vector<bool> cell_degenerate(gx * gy, false);
    for (size_t bx = 0; bx < gx; bx += static_cast<size_t>(block_nodes)) {
        const size_t bend = std::min(gx, bx + static_cast<size_t>(block_nodes));
        std::vector<CenteredStats> xstats;
        xstats.reserve(bend - bx);
        for (size_t ix = bx; ix < bend; ++ix)
            xstats.push_back(axis_stats(u_x, std::pow(10.0, lx_nodes[ix]), family));
        for (size_t iy = 0; iy < gy; ++iy) {
            const CenteredStats ystat = axis_stats(u_y, std::pow(10.0, ly_nodes[iy]), family);
            for (size_t ix = bx; ix < bend; ++ix) {
                const CenteredStats& xstat = xstats[ix - bx];
                const size_t cell = ix * gy + iy;
                SurfaceSample& s = res.samples[cell];
                s.log10_sx = lx_nodes[ix];
                s.log10_sy = ly_nodes[iy];
                if (xstat.degenerate() || ystat.degenerate()) {
                    s.value = 0.0;
                    cell_degenerate[cell] = true;
                } else {
                    const double cov = PackedSym::dot_mean(xstat.centered.m, ystat.centered.m);
                    s.value = cov / std::sqrt(xstat.variance * ystat.variance);
                }
            }
        }
    }

    // Single row-major pass: strict improvement ⇒ smallest (lx, ly) wins ties.
    for (size_t cell = 0; cell < res.samples.size(); ++cell) {
        if (!cell_degenerate[cell]) res.all_degenerate = false;
        const double v = res.samples[cell].value;
        if (res.best_index < 0 || v > res.best_value) {
            res.best_index = static_cast<int>(cell);
            res.best_value = v;
            res.best_lx = res.samples[cell].log10_sx;
            res.best_ly = res.samples[cell].log10_sy;
        }
    }
    return res;
}

namespace {

std::vector<double> linspace(double lo, double hi, int points) {
    std::vector<double> v(static_cast<size_t>(points));
    const double step = (hi - lo) / (points - 1);
    for (int i = 0; i < points; ++i) v[i] = lo + step * i;
    v.back() = hi;
    return v;
}

AssociationEstimate package(const ScanResult& res, double alpha) {
    AssociationEstimate est;
    est.measure = Measure::similarity_corr;
    est.alpha = alpha;
    if (res.all_degenerate || res.best_index < 0) {
        est.degenerate = true;
        est.value = 0.0;
        return est;
    }
    est.value = res.best_value;
    est.s_x = std::pow(10.0, res.best_lx);
    est.s_y = std::pow(10.0, res.best_ly);
    return est;
}

}  // namespace

AssociationEstimate maximize_powers_normalized(const PackedSym& u_x, const PackedSym& u_y,
                                               double f_x, double f_y, double alpha,
                                               const ScaleGrid& grid, KernelFamily family) {
    grid.validate();
    const double lfx = std::log10(f_x);
    const double lfy = std::log10(f_y);
    auto raw = [](const std::vector<double>& nodes, double shift) {
        std::vector<double> r(nodes.size());
        for (size_t i = 0; i < nodes.size(); ++i) r[i] = nodes[i] + shift;
        return r;
    };

    const std::vector<double> coarse = linspace(grid.log10_min, grid.log10_max,
                                                grid.points_per_axis);
    ScanResult best = scan_nodes(u_x, u_y, raw(coarse, lfx), raw(coarse, lfy), family);
    if (best.all_degenerate || best.best_index < 0) return package(best, alpha);

    double inc_value = best.best_value;
    double inc_lx = best.best_lx;  // raw units from here on
    double inc_ly = best.best_ly;
    double h = (grid.log10_max - grid.log10_min) / (grid.points_per_axis - 1);
    for (int round = 0; round < grid.refine_iterations; ++round) {
        const std::vector<double> wx = linspace(inc_lx - h, inc_lx + h, 5);
        const std::vector<double> wy = linspace(inc_ly - h, inc_ly + h, 5);
        const ScanResult r = scan_nodes(u_x, u_y, wx, wy, family);
        double improvement = 0.0;
        if (r.best_index >= 0 && !r.all_degenerate && r.best_value > inc_value) {
            improvement = r.best_value - inc_value;
            inc_value = r.best_value;
            inc_lx = r.best_lx;
            inc_ly = r.best_ly;
        }
        h /= 4.0;
        if (improvement < grid.refine_tolerance) break;
    }

    AssociationEstimate est;
    est.measure = Measure::similarity_corr;
    est.alpha = alpha;
    est.value = inc_value;
    est.s_x = std::pow(10.0, inc_lx);
    est.s_y = std::pow(10.0, inc_ly);
    return est;
}

AssociationEstimate maximize_powers_at_nodes(const PackedSym& u_x, const PackedSym& u_y,
                                             double alpha, const std::vector<double>& lx_nodes,
                                             const std::vector<double>& ly_nodes,
                                             KernelFamily family) {
    if (lx_nodes.empty() || ly_nodes.empty()) throw ConfigError("scale node lists must be non-empty");
    return package(scan_nodes(u_x, u_y, lx_nodes, ly_nodes, family), alpha);
}

}  // namespace detail

namespace {

struct Powered {
    PackedSym u;
    double f = 1.0;  // median^alpha normalization factor
};

Powered powered_axis(const SampleSet& x, double alpha) {
    const PairwiseMatrix d = pairwise_distances(x);
    Powered p;
    p.u = power_transform(d, alpha);
    p.f = std::pow(median_nonzero_distance(d), alpha);
    return p;
}

}  // namespace

AssociationEstimate maximize_correlation(const SampleSet& x, const SampleSet& y, double alpha,
                                         const ScaleGrid& grid, KernelFamily family) {
    if (x.n() != y.n()) throw SizeError("sample sets must have the same number of samples");
    const Powered px = powered_axis(x, alpha);
    const Powered py = powered_axis(y, alpha);
    return detail::maximize_powers_normalized(px.u, py.u, px.f, py.f, alpha, grid, family);
}

AssociationEstimate maximize_correlation_at_nodes(const SampleSet& x, const SampleSet& y,
                                                  double alpha,
                                                  const std::vector<double>& log10_sx_nodes,
                                                  const std::vector<double>& log10_sy_nodes,
                                                  KernelFamily family) {
    if (x.n() != y.n()) throw SizeError("sample sets must have the same number of samples");
    const PackedSym ux = power_transform(pairwise_distances(x), alpha);
    const PackedSym uy = power_transform(pairwise_distances(y), alpha);
    return detail::maximize_powers_at_nodes(ux, uy, alpha, log10_sx_nodes, log10_sy_nodes, family);
}

std::vector<double> decade_nodes(int lo_k, int hi_k) {
    if (lo_k > hi_k) throw ConfigError("decade_nodes: lower exponent exceeds upper exponent");
    std::vector<double> v;
    for (int k = lo_k; k <= hi_k; ++k) v.push_back(static_cast<double>(k));
    return v;
}

std::vector<SurfaceSample> evaluate_surface(const SampleSet& x, const SampleSet& y, double alpha,
                                            const ScaleGrid& grid, KernelFamily family) {
    if (x.n() != y.n()) throw SizeError("sample sets must have the same number of samples");
    grid.validate();
    const Powered px = powered_axis(x, alpha);
    const Powered py = powered_axis(y, alpha);
    const double lfx = std::log10(px.f);
    const double lfy = std::log10(py.f);
    std::vector<double> norm(static_cast<size_t>(grid.points_per_axis));
    std::vector<double> rx(norm.size()), ry(norm.size());
    const double step = (grid.log10_max - grid.log10_min) / (grid.points_per_axis - 1);
    for (size_t i = 0; i < norm.size(); ++i) {
        norm[i] = grid.log10_min + step * static_cast<double>(i);
        rx[i] = norm[i] + lfx;
        ry[i] = norm[i] + lfy;
    }
    norm.back() = grid.log10_max;
    detail::ScanResult res = detail::scan_nodes(px.u, py.u, rx, ry, family);
    // report coordinates in the grid's normalized units
    for (size_t ix = 0; ix < norm.size(); ++ix) {
        for (size_t iy = 0; iy < norm.size(); ++iy) {
            SurfaceSample& s = res.samples[ix * norm.size() + iy];
            s.log10_sx = norm[ix];
            s.log10_sy = norm[iy];
        }
    }
    return std::move(res.samples);
}

VarianceScaleResult maximize_variance_scale(const SampleSet& x, double alpha,
                                            const ScaleGrid& grid, KernelFamily family) {
    grid.validate();
    const Powered px = powered_axis(x, alpha);

    auto variance_at = [&](double raw_log) {
        const CenteredStats s = detail::axis_stats(px.u, std::pow(10.0, raw_log), family);
        return std::pair<double, bool>(s.variance, s.degenerate());
    };

    const double lf = std::log10(px.f);
    const int g = grid.points_per_axis;
    const double step = (grid.log10_max - grid.log10_min) / (g - 1);
    double best_v = 0.0, best_l = 0.0;
    bool found = false;
    for (int i = 0; i < g; ++i) {
        const double l = grid.log10_min + step * i + lf;
        const auto [v, deg] = variance_at(l);
        if (deg) continue;
        if (!found || v > best_v) {
            found = true;
            best_v = v;
            best_l = l;
        }
    }
    VarianceScaleResult out;
    if (!found) {
        out.degenerate = true;
        return out;
    }
    double h = step;
    for (int round = 0; round < grid.refine_iterations; ++round) {
        const double center = best_l;
        const double before = best_v;
        for (int i = 0; i < 5; ++i) {
            const double l = center - h + (h / 2.0) * i;
            const auto [v, deg] = variance_at(l);
            if (!deg && v > best_v) {
                best_v = v;
                best_l = l;
            }
        }
        h /= 4.0;
        // relative improvement: variances are not normalized to [0, 1]
        if (best_v - before < grid.refine_tolerance * before) break;
    }
    out.scale = std::pow(10.0, best_l);
    out.variance = best_v;
    return out;
}

}  // namespace simcorr
