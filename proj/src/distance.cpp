#include "simcorr/distance.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace simcorr {

namespace {

// Squared Euclidean distance between rows i and j of one or two stacked sets.
inline double sq_dist_rows(const SampleSet& s, int i, int j) {
    double acc = 0.0;
    for (int k = 0; k < s.p(); ++k) {
        const double diff = s.at(i, k) - s.at(j, k);
        acc += diff * diff;
    }
    return acc;
}

}  // namespace

PairwiseMatrix pairwise_distances(const SampleSet& x) {
    const int n = x.n();
    PairwiseMatrix out;
    out.kind = PairwiseKind::distance;
    out.m = PackedSym(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) out.m.set(i, j, std::sqrt(sq_dist_rows(x, i, j)));
    }
    return out;
}

PairwiseMatrix pairwise_distances_complex(const ComplexSampleSet& x) {
    const int n = x.n();
    PairwiseMatrix out;
    out.kind = PairwiseKind::distance;
    out.m = PackedSym(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double s = sq_dist_rows(x.re(), i, j) + sq_dist_rows(x.im(), i, j);
            out.m.set(i, j, std::sqrt(s));
        }
    }
    return out;
}

PackedSym power_transform(const PairwiseMatrix& d, double alpha) {
    if (!(alpha > 0)) throw ConfigError("distance exponent must be positive");
    const int n = d.m.n();
    PackedSym u(n);
    const double* src = d.m.data();
    double* dst = u.data();
    const size_t sz = d.m.packed_size();
    if (alpha == 1.0) {
        std::copy(src, src + sz, dst);
    } else if (alpha == 2.0) {
        for (size_t k = 0; k < sz; ++k) dst[k] = src[k] * src[k];
    } else {
        for (size_t k = 0; k < sz; ++k) dst[k] = src[k] > 0 ? std::pow(src[k], alpha) : 0.0;
    }
    return u;
}

double median_nonzero_distance(const PairwiseMatrix& d) {
    const int n = d.m.n();
    std::vector<double> vals;
    vals.reserve(d.m.packed_size());
    // off-diagonal packed entries only, each unordered pair once
    const double* src = d.m.data();
    size_t k = 0;
    for (int i = 0; i < n; ++i) {
        ++k;  // skip diagonal
        for (int j = i + 1; j < n; ++j, ++k)
            if (src[k] > 0) vals.push_back(src[k]);
    }
    if (vals.empty()) return 1.0;
    const size_t m = vals.size();
    const size_t hi = m / 2;
    std::nth_element(vals.begin(), vals.begin() + hi, vals.end());
    const double upper = vals[hi];
    if (m % 2 == 1) return upper;
    const double lower = *std::max_element(vals.begin(), vals.begin() + hi);
    return 0.5 * (lower + upper);
}

PairwiseMatrix kernel_from_power(const PackedSym& u, double scale, KernelFamily family) {
    if (!(scale > 0)) throw ConfigError("kernel scale must be positive");
    PairwiseMatrix out;
    out.kind = PairwiseKind::similarity;
    out.m = PackedSym(u.n());
    const double* src = u.data();
    double* dst = out.m.data();
    const size_t sz = u.packed_size();
    if (family == KernelFamily::exponential) {
        for (size_t k = 0; k < sz; ++k) dst[k] = std::exp(-src[k] / scale);
    } else {
        for (size_t k = 0; k < sz; ++k) {
            const double r = src[k] / scale;
            dst[k] = r < 1.0 ? (1.0 - r) * (1.0 - r) : 0.0;
        }
    }
    return out;
}

PairwiseMatrix similarity_from_distances(const PairwiseMatrix& d, const KernelConfig& cfg) {
    cfg.validate();
    return kernel_from_power(power_transform(d, cfg.alpha), cfg.scale, cfg.family);
}

}  // namespace simcorr
