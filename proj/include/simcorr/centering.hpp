#pragma once

#include "simcorr/symmat.hpp"
#include "simcorr/types.hpp"

namespace simcorr {

// H·m·H with H = I − 11ᵀ/N, computed entrywise:
//   A_ij = m_ij − rowmean_i − rowmean_j + grandmean.
CenteredKernel double_center(const PackedSym& m);
inline CenteredKernel double_center(const PairwiseMatrix& m) { return double_center(m.m); }

// Double centering followed by subtraction of [tr(HmH)/(N−1)]·H, the
// variance-minimizing choice of the free diagonal parameter. Trace-free.
CenteredKernel triple_center(const PackedSym& m);
inline CenteredKernel triple_center(const PairwiseMatrix& m) { return triple_center(m.m); }

// Degeneracy threshold for a variance derived from the (uncentered) matrix m:
// 1e-14 × mean squared entry. Centering is a Frobenius-norm contraction, so
// this bounds the centered entry scale from above.
double variance_epsilon(const PackedSym& m);

// Centered matrix together with its variance (1/N²)·tr(C²) and the
// degeneracy threshold of the source matrix; saves re-walking the entries.
struct CenteredStats {
    CenteredKernel centered;
    double variance = 0.0;
    double epsilon = 0.0;
    bool degenerate() const { return variance <= epsilon; }
};

CenteredStats double_center_stats(const PackedSym& m);
CenteredStats triple_center_stats(const PackedSym& m);

}  // namespace simcorr
