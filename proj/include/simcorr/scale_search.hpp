#pragma once

#include <vector>

#include "simcorr/association.hpp"
#include "simcorr/types.hpp"

namespace simcorr {

// Maximize the similarity correlation over (s_x, s_y).
//
// The grid is interpreted in log10 of the NORMALIZED scale: distances on each
// side are divided by their median nonzero distance before the kernel is
// applied, which makes the default window dataset-independent. A coarse
// row-major scan is followed by `refine_iterations` rounds of nested 5×5 local
// grids (half-width shrinking 4× per round, early stop once a round improves
// the value by less than refine_tolerance). Ties resolve to the smallest
// (log10_sx, log10_sy) in lexicographic order. Reported s_x/s_y are raw
// (unnormalized) scales.
AssociationEstimate maximize_correlation(const SampleSet& x, const SampleSet& y, double alpha,
                                         const ScaleGrid& grid,
                                         KernelFamily family = KernelFamily::exponential);

// Maximize over explicit per-axis node lists given in log10 of the RAW scale
// (no normalization, no refinement). Used by the table-regeneration commands,
// which evaluate whole decades: nodes {−8, −7, …, +8}.
AssociationEstimate maximize_correlation_at_nodes(const SampleSet& x, const SampleSet& y,
                                                  double alpha,
                                                  const std::vector<double>& log10_sx_nodes,
                                                  const std::vector<double>& log10_sy_nodes,
                                                  KernelFamily family = KernelFamily::exponential);

// Convenience: integer decades 10^lo_k … 10^hi_k on both axes.
std::vector<double> decade_nodes(int lo_k, int hi_k);

// Full correlation surface, one sample per grid node, row-major over
// (log10_sx, log10_sy). Coordinates are in the grid's own (normalized) units;
// degenerate cells carry value 0.
std::vector<SurfaceSample> evaluate_surface(const SampleSet& x, const SampleSet& y, double alpha,
                                            const ScaleGrid& grid,
                                            KernelFamily family = KernelFamily::exponential);

// 1-D maximization of the similarity variance over the scale.
struct VarianceScaleResult {
    double scale = 0.0;     // raw units; meaningless when degenerate
    double variance = 0.0;  // 0 when degenerate
    bool degenerate = false;
};
VarianceScaleResult maximize_variance_scale(const SampleSet& x, double alpha,
                                            const ScaleGrid& grid,
                                            KernelFamily family = KernelFamily::exponential);

namespace detail {

// Kernel + triple-centering statistics for one axis value (s in raw units of u).
CenteredStats axis_stats(const PackedSym& u, double scale, KernelFamily family);

struct ScanResult {
    std::vector<SurfaceSample> samples;  // row-major over (lx, ly)
    double best_value = 0.0;
    int best_index = -1;  // -1 ⇔ every cell degenerate
    double best_lx = 0.0;
    double best_ly = 0.0;
    bool all_degenerate = true;
};

// Scan the ratio surface over all node pairs. `u_x`/`u_y` are powered distance
// matrices; nodes are log10 scales in the raw units of u. The x-axis is cached
// in blocks of `block_nodes` (0 → derived from a ~256 MB budget); results are
// bit-identical for any block size. Row-major argmax with strict improvement
// implements the lexicographic tie-break for ascending node lists.
ScanResult scan_nodes(const PackedSym& u_x, const PackedSym& u_y,
                      const std::vector<double>& lx_nodes, const std::vector<double>& ly_nodes,
                      KernelFamily family, int block_nodes = 0);

// The maximizers on precomputed powered distance matrices (shared with the
// complex-coherence pipeline). `f_x`/`f_y` are the per-axis normalization
// factors median^alpha; the grid is in normalized units, reported scales raw.
AssociationEstimate maximize_powers_normalized(const PackedSym& u_x, const PackedSym& u_y,
                                               double f_x, double f_y, double alpha,
                                               const ScaleGrid& grid, KernelFamily family);

// Raw-unit node lists, no normalization, no refinement.
AssociationEstimate maximize_powers_at_nodes(const PackedSym& u_x, const PackedSym& u_y,
                                             double alpha,
                                             const std::vector<double>& lx_nodes,
                                             const std::vector<double>& ly_nodes,
                                             KernelFamily family);

}  // namespace detail

}  // namespace simcorr
