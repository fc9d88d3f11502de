#pragma once

#include "simcorr/symmat.hpp"
#include "simcorr/types.hpp"

namespace simcorr {

// Euclidean distances between all sample pairs.
PairwiseMatrix pairwise_distances(const SampleSet& x);

// Distances between complex samples: sqrt(‖ΔRe‖² + ‖ΔIm‖²), i.e. the
// Euclidean distance of the real embedding.
PairwiseMatrix pairwise_distances_complex(const ComplexSampleSet& x);

// Entrywise d^alpha (alpha == 1 copies, alpha == 2 squares, general uses pow).
PackedSym power_transform(const PairwiseMatrix& d, double alpha);

// True median of the strictly positive distances (each unordered pair counted
// once). Returns 1.0 when every distance is zero, so normalization is a no-op.
double median_nonzero_distance(const PairwiseMatrix& d);

// Kernel applied to precomputed powered distances u = d^alpha:
// exponential → exp(−u/s); biweight → (1 − u/s)² where u/s < 1, else 0.
PairwiseMatrix kernel_from_power(const PackedSym& u, double scale, KernelFamily family);

// Similarity matrix from raw distances per the configuration.
PairwiseMatrix similarity_from_distances(const PairwiseMatrix& d, const KernelConfig& cfg);

}  // namespace simcorr
