#pragma once

#include <vector>

#include "simcorr/centering.hpp"
#include "simcorr/symmat.hpp"
#include "simcorr/types.hpp"

namespace simcorr {

// Association between complex-valued x and y sides, reported together with an
// additive split into the contributions of the real and imaginary coordinates.
//
// Both flavours share the partition scheme: with V(·,·) the corresponding
// covariance between real-valued groups (at the same scales/exponent for the
// similarity flavour),
//   w_re = V(Re x, Re y) + V(Im x, Im y)
//   w_im = V(Re x, Im y) + V(Im x, Re y)
// and the parts are total·w_re/(w_re+w_im), total·w_im/(w_re+w_im), so
// real_part + imag_part == total to rounding. Near-cancellation of w_re + w_im
// sets partition_degenerate and reports an equal split.

// Distance flavour: plain (exponent-1) complex distances, double centering,
// no scale parameters.
CoherenceBreakdown distance_coherence(const ComplexSampleSet& x, const ComplexSampleSet& y);

// Similarity flavour: exponential kernel on complex distances raised to
// `alpha`, triple centering, total maximized over (s_x, s_y) on the default
// normalized grid; the partition is evaluated at the maximizing scales.
CoherenceBreakdown similarity_coherence(const ComplexSampleSet& x, const ComplexSampleSet& y,
                                        double alpha = 2.0, const ScaleGrid& grid = ScaleGrid{});

// Same, but maximizing over explicit raw log10 scale nodes (table protocol:
// whole decades, no normalization, no refinement).
CoherenceBreakdown similarity_coherence_at_nodes(const ComplexSampleSet& x,
                                                 const ComplexSampleSet& y, double alpha,
                                                 const std::vector<double>& log10_sx_nodes,
                                                 const std::vector<double>& log10_sy_nodes);

namespace detail {

// Split `total` into shares proportional to w_re and w_im. When the weights
// nearly cancel (|w_re + w_im| ≤ 1e-14 · max(|w_re|, |w_im|, 1e-14)) the split
// is declared degenerate and both halves get total/2.
struct PartitionResult {
    double real_part = 0.0;
    double imag_part = 0.0;
    bool degenerate = false;
};
PartitionResult partition_shares(double total, double w_re, double w_im);

}  // namespace detail

}  // namespace simcorr
