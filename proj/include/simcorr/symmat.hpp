#pragma once

#include <cstddef>
#include <vector>

namespace simcorr {

// Dense symmetric N×N matrix stored as the packed upper triangle
// (row-major, diagonal included): n(n+1)/2 doubles. Symmetry is exact by
// construction — both (i,j) and (j,i) read the same stored entry.
class PackedSym {
  public:
    PackedSym() = default;
    explicit PackedSym(int n) : n_(n), a_(static_cast<size_t>(n) * (n + 1) / 2, 0.0) {}

    int n() const { return n_; }
    size_t packed_size() const { return a_.size(); }

    size_t index(int i, int j) const {
        if (i > j) std::swap(i, j);
        return static_cast<size_t>(i) * n_ - static_cast<size_t>(i) * (i - 1) / 2 + (j - i);
    }
    double at(int i, int j) const { return a_[index(i, j)]; }
    void set(int i, int j, double v) { a_[index(i, j)] = v; }

    double* data() { return a_.data(); }
    const double* data() const { return a_.data(); }

    // Row sums over the full (mirrored) matrix, one pass over packed storage.
    std::vector<double> row_sums() const;

    // (1/N²)·Σ_ij m_ij² over the full matrix.
    double mean_square() const;

    // Maximum |entry|.
    double max_abs() const;

    // (1/N²)·Σ_ij a_ij·b_ij over the full matrices (fixed summation order).
    static double dot_mean(const PackedSym& a, const PackedSym& b);

  private:
    int n_ = 0;
    std::vector<double> a_;
};

enum class PairwiseKind { distance, similarity };

// Symmetric matrix of pairwise distances (zero diagonal) or kernel
// similarities (unit diagonal).
struct PairwiseMatrix {
    PackedSym m;
    PairwiseKind kind = PairwiseKind::distance;
};

// Result of double- or triple-centering: all row/column sums vanish.
struct CenteredKernel {
    PackedSym m;
};

}  // namespace simcorr
