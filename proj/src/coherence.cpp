#include "simcorr/coherence.hpp"

#include <algorithm>
#include <cmath>

#include "simcorr/association.hpp"
#include "simcorr/distance.hpp"
#include "simcorr/scale_search.hpp"

namespace simcorr {

namespace detail {

PartitionResult partition_shares(double total, double w_re, double w_im) {
    PartitionResult out;
    const double sum = w_re + w_im;
    const double guard = 1e-14 * std::max({std::fabs(w_re), std::fabs(w_im), 1e-14});
    if (std::fabs(sum) <= guard) {
        out.degenerate = true;
        out.real_part = 0.5 * total;
        out.imag_part = 0.5 * total;
        return out;
    }
    out.real_part = total * (w_re / sum);
    out.imag_part = total * (w_im / sum);
    return out;
}

}  // namespace detail

namespace {

void check_same_n(const ComplexSampleSet& x, const ComplexSampleSet& y) {
    if (x.n() != y.n()) throw SizeError("sample sets must have the same number of samples");
}

CoherenceBreakdown assemble(double total, double w_re, double w_im, CoherenceMeasure measure) {
    CoherenceBreakdown out;
    out.measure = measure;
    out.total = total;
    const detail::PartitionResult parts = detail::partition_shares(total, w_re, w_im);
    out.real_part = parts.real_part;
    out.imag_part = parts.imag_part;
    out.partition_degenerate = parts.degenerate;
    return out;
}

CoherenceBreakdown degenerate_breakdown(CoherenceMeasure measure) {
    CoherenceBreakdown out;
    out.measure = measure;
    out.degenerate = true;
    return out;
}

// Similarity partition weights at fixed scales: four real-group covariances.
void similarity_weights(const ComplexSampleSet& x, const ComplexSampleSet& y, double alpha,
                        double s_x, double s_y, double* w_re, double* w_im) {
    const KernelConfig cx{KernelFamily::exponential, alpha, s_x};
    const KernelConfig cy{KernelFamily::exponential, alpha, s_y};
    *w_re = similarity_covariance(x.re(), y.re(), cx, cy) +
            similarity_covariance(x.im(), y.im(), cx, cy);
    *w_im = similarity_covariance(x.re(), y.im(), cx, cy) +
            similarity_covariance(x.im(), y.re(), cx, cy);
}

CoherenceBreakdown similarity_from_estimate(const ComplexSampleSet& x, const ComplexSampleSet& y,
                                            double alpha, const AssociationEstimate& est) {
    if (est.degenerate) return degenerate_breakdown(CoherenceMeasure::similarity);
    double w_re = 0.0, w_im = 0.0;
    similarity_weights(x, y, alpha, *est.s_x, *est.s_y, &w_re, &w_im);
    CoherenceBreakdown out = assemble(est.value, w_re, w_im, CoherenceMeasure::similarity);
    out.s_x = est.s_x;
    out.s_y = est.s_y;
    return out;
}

}  // namespace

CoherenceBreakdown distance_coherence(const ComplexSampleSet& x, const ComplexSampleSet& y) {
    check_same_n(x, y);
    const CenteredStats sx = double_center_stats(pairwise_distances_complex(x).m);
    const CenteredStats sy = double_center_stats(pairwise_distances_complex(y).m);
    if (sx.degenerate() || sy.degenerate())
        return degenerate_breakdown(CoherenceMeasure::distance);
    const double cov = PackedSym::dot_mean(sx.centered.m, sy.centered.m);
    const double total = cov / std::sqrt(sx.variance * sy.variance);
    const double w_re =
        distance_covariance(x.re(), y.re()) + distance_covariance(x.im(), y.im());
    const double w_im =
        distance_covariance(x.re(), y.im()) + distance_covariance(x.im(), y.re());
    return assemble(total, w_re, w_im, CoherenceMeasure::distance);
}

CoherenceBreakdown similarity_coherence(const ComplexSampleSet& x, const ComplexSampleSet& y,
                                        double alpha, const ScaleGrid& grid) {
    check_same_n(x, y);
    const PairwiseMatrix dx = pairwise_distances_complex(x);
    const PairwiseMatrix dy = pairwise_distances_complex(y);
    const PackedSym ux = power_transform(dx, alpha);
    const PackedSym uy = power_transform(dy, alpha);
    const double fx = std::pow(median_nonzero_distance(dx), alpha);
    const double fy = std::pow(median_nonzero_distance(dy), alpha);
    const AssociationEstimate est =
        detail::maximize_powers_normalized(ux, uy, fx, fy, alpha, grid,
                                           KernelFamily::exponential);
    return similarity_from_estimate(x, y, alpha, est);
}

CoherenceBreakdown similarity_coherence_at_nodes(const ComplexSampleSet& x,
                                                 const ComplexSampleSet& y, double alpha,
                                                 const std::vector<double>& log10_sx_nodes,
                                                 const std::vector<double>& log10_sy_nodes) {
    check_same_n(x, y);
    const PackedSym ux = power_transform(pairwise_distances_complex(x), alpha);
    const PackedSym uy = power_transform(pairwise_distances_complex(y), alpha);
    const AssociationEstimate est = detail::maximize_powers_at_nodes(
        ux, uy, alpha, log10_sx_nodes, log10_sy_nodes, KernelFamily::exponential);
    return similarity_from_estimate(x, y, alpha, est);
}

}  // namespace simcorr
