#pragma once

#include "simcorr/centering.hpp"
#include "simcorr/distance.hpp"
#include "simcorr/types.hpp"

namespace simcorr {

// (1/N²)·tr(AB) with A, B the double-centered distance matrices.
double distance_covariance(const SampleSet& x, const SampleSet& y);

// (1/N²)·tr(A²) ≥ 0.
double distance_variance(const SampleSet& x);

// Normalized distance covariance; zero branch (degenerate=true) when either
// variance falls below its degeneracy threshold.
AssociationEstimate distance_correlation(const SampleSet& x, const SampleSet& y);

// (1/N²)·tr(D²) with D the triple-centered similarity matrix.
double similarity_variance(const SampleSet& x, const KernelConfig& cfg);

// (1/N²)·tr(DE); may be negative. Requires matching N and matching exponent.
double similarity_covariance(const SampleSet& x, const SampleSet& y,
                             const KernelConfig& cfg_x, const KernelConfig& cfg_y);

// Normalized similarity covariance at fixed scales; 0 on the degenerate branch.
double similarity_correlation_at(const SampleSet& x, const SampleSet& y, double alpha,
                                 double s_x, double s_y,
                                 KernelFamily family = KernelFamily::exponential);

// Correlation built from double-centered (not triple-centered) exponential
// kernels with exponent fixed to 1; approaches the distance correlation as the
// scales grow.
double modified_similarity_correlation(const SampleSet& x, const SampleSet& y,
                                       double s_x, double s_y);

// Same computation with the full result record (degeneracy flag, scales).
AssociationEstimate modified_similarity_estimate(const SampleSet& x, const SampleSet& y,
                                                 double s_x, double s_y);

// tr(G̃xG̃y)/√(tr(G̃x²)·tr(G̃y²)) with G̃ the double-centered Gram matrix.
AssociationEstimate rv_coefficient(const SampleSet& x, const SampleSet& y);

}  // namespace simcorr
