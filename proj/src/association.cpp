#include "simcorr/association.hpp"

#include <cmath>

namespace simcorr {

namespace {

void check_same_n(const SampleSet& x, const SampleSet& y) {
    if (x.n() != y.n()) throw SizeError("sample sets must have the same number of samples");
}

// Ratio with the zero branch applied per factor.
double guarded_ratio(double cov, const CenteredStats& sx, const CenteredStats& sy,
                     bool* degenerate = nullptr) {
    const bool deg = sx.degenerate() || sy.degenerate();
    if (degenerate) *degenerate = deg;
    if (deg) return 0.0;
    return cov / std::sqrt(sx.variance * sy.variance);
}

CenteredStats triple_stats_for(const SampleSet& x, const KernelConfig& cfg) {
    const PairwiseMatrix k = similarity_from_distances(pairwise_distances(x), cfg);
    return triple_center_stats(k.m);
}

}  // namespace

double distance_covariance(const SampleSet& x, const SampleSet& y) {
    check_same_n(x, y);
    const CenteredKernel a = double_center(pairwise_distances(x).m);
    const CenteredKernel b = double_center(pairwise_distances(y).m);
    return PackedSym::dot_mean(a.m, b.m);
}

double distance_variance(const SampleSet& x) {
    const CenteredKernel a = double_center(pairwise_distances(x).m);
    return PackedSym::dot_mean(a.m, a.m);
}

AssociationEstimate distance_correlation(const SampleSet& x, const SampleSet& y) {
    check_same_n(x, y);
    const CenteredStats sx = double_center_stats(pairwise_distances(x).m);
    const CenteredStats sy = double_center_stats(pairwise_distances(y).m);
    const double cov = PackedSym::dot_mean(sx.centered.m, sy.centered.m);
    AssociationEstimate est;
    est.measure = Measure::distance_corr;
    est.value = guarded_ratio(cov, sx, sy, &est.degenerate);
    return est;
}

double similarity_variance(const SampleSet& x, const KernelConfig& cfg) {
    cfg.validate();
    const CenteredStats s = triple_stats_for(x, cfg);
    return s.variance;
}

double similarity_covariance(const SampleSet& x, const SampleSet& y, const KernelConfig& cfg_x,
                             const KernelConfig& cfg_y) {
    check_same_n(x, y);
    cfg_x.validate();
    cfg_y.validate();
    if (cfg_x.alpha != cfg_y.alpha)
        throw SizeError("kernel configurations must share the distance exponent");
    const CenteredStats sx = triple_stats_for(x, cfg_x);
    const CenteredStats sy = triple_stats_for(y, cfg_y);
    return PackedSym::dot_mean(sx.centered.m, sy.centered.m);
}

double similarity_correlation_at(const SampleSet& x, const SampleSet& y, double alpha, double s_x,
                                 double s_y, KernelFamily family) {
    check_same_n(x, y);
    const KernelConfig cfg_x{family, alpha, s_x};
    const KernelConfig cfg_y{family, alpha, s_y};
    cfg_x.validate();
    cfg_y.validate();
    const CenteredStats sx = triple_stats_for(x, cfg_x);
    const CenteredStats sy = triple_stats_for(y, cfg_y);
    const double cov = PackedSym::dot_mean(sx.centered.m, sy.centered.m);
    return guarded_ratio(cov, sx, sy);
}

AssociationEstimate modified_similarity_estimate(const SampleSet& x, const SampleSet& y,
                                                 double s_x, double s_y) {
    check_same_n(x, y);
    const KernelConfig cfg_x{KernelFamily::exponential, 1.0, s_x};
    const KernelConfig cfg_y{KernelFamily::exponential, 1.0, s_y};
    cfg_x.validate();
    cfg_y.validate();
    const PairwiseMatrix kx = similarity_from_distances(pairwise_distances(x), cfg_x);
    const PairwiseMatrix ky = similarity_from_distances(pairwise_distances(y), cfg_y);
    const CenteredStats sx = double_center_stats(kx.m);
    const CenteredStats sy = double_center_stats(ky.m);
    const double cov = PackedSym::dot_mean(sx.centered.m, sy.centered.m);
    AssociationEstimate est;
    est.measure = Measure::modified_similarity_corr;
    est.alpha = 1.0;
    est.s_x = s_x;
    est.s_y = s_y;
    est.value = guarded_ratio(cov, sx, sy, &est.degenerate);
    return est;
}

double modified_similarity_correlation(const SampleSet& x, const SampleSet& y, double s_x,
                                       double s_y) {
    return modified_similarity_estimate(x, y, s_x, s_y).value;
}

AssociationEstimate rv_coefficient(const SampleSet& x, const SampleSet& y) {
    check_same_n(x, y);
    const int n = x.n();
    auto gram = [n](const SampleSet& s) {
        PackedSym g(n);
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                double acc = 0.0;
                for (int k = 0; k < s.p(); ++k) acc += s.at(i, k) * s.at(j, k);
                g.set(i, j, acc);
            }
        }
        return g;
    };
    const CenteredStats sx = double_center_stats(gram(x));
    const CenteredStats sy = double_center_stats(gram(y));
    const double cov = PackedSym::dot_mean(sx.centered.m, sy.centered.m);
    AssociationEstimate est;
    est.measure = Measure::rv;
    est.value = guarded_ratio(cov, sx, sy, &est.degenerate);
    return est;
}

}  // namespace simcorr
