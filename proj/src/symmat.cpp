#include "simcorr/symmat.hpp"

#include <cmath>

namespace simcorr {

std::vector<double> PackedSym::row_sums() const {
    std::vector<double> rs(static_cast<size_t>(n_), 0.0);
    size_t k = 0;
    for (int i = 0; i < n_; ++i) {
        rs[i] += a_[k];
        ++k;
        for (int j = i + 1; j < n_; ++j, ++k) {
            rs[i] += a_[k];
            rs[j] += a_[k];
        }
    }
    return rs;
}

double PackedSym::mean_square() const {
    double off = 0.0, diag = 0.0;
    size_t k = 0;
    for (int i = 0; i < n_; ++i) {
        diag += a_[k] * a_[k];
        ++k;
        for (int j = i + 1; j < n_; ++j, ++k) off += a_[k] * a_[k];
    }
    const double nn = static_cast<double>(n_) * n_;
    return (2.0 * off + diag) / nn;
}

double PackedSym::max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::fabs(v));
    return m;
}

double PackedSym::dot_mean(const PackedSym& a, const PackedSym& b) {
    const int n = a.n_;
    const double* pa = a.a_.data();
    const double* pb = b.a_.data();
    double off = 0.0, diag = 0.0;
    size_t k = 0;
    for (int i = 0; i < n; ++i) {
        diag += pa[k] * pb[k];
        ++k;
        for (int j = i + 1; j < n; ++j, ++k) off += pa[k] * pb[k];
    }
    const double nn = static_cast<double>(n) * n;
    return (2.0 * off + diag) / nn;
}

}  // namespace simcorr
