#include "simcorr/centering.hpp"

#include <vector>

namespace simcorr {

namespace {

// Shared core: writes m_ij − μ_i − μ_j + g, optionally followed by the
// trace-normalizing correction −β(δ_ij − 1/N).
CenteredKernel center_impl(const PackedSym& m, bool triple) {
    const int n = m.n();
    if (n < 2) throw SizeError("centering needs at least 2 samples");
    const std::vector<double> rs = m.row_sums();
    std::vector<double> mu(static_cast<size_t>(n));
    double g = 0.0;
    for (int i = 0; i < n; ++i) {
        mu[i] = rs[i] / n;
        g += rs[i];
    }
    g /= static_cast<double>(n) * n;

    double beta = 0.0;
    if (triple) {
        double tr = 0.0;  // trace of HmH, from the diagonal of the centered matrix
        for (int i = 0; i < n; ++i) tr += m.at(i, i) - 2.0 * mu[i] + g;
        beta = tr / (n - 1);
    }

    CenteredKernel out;
    out.m = PackedSym(n);
    const double* src = m.data();
    double* dst = out.m.data();
    const double beta_offdiag = beta / n;              // −β·(−1/N)
    const double beta_diag = beta * (1.0 - 1.0 / n);   // β·(1 − 1/N)
    size_t k = 0;
    for (int i = 0; i < n; ++i) {
        dst[k] = src[k] - 2.0 * mu[i] + g - beta_diag;
        ++k;
        for (int j = i + 1; j < n; ++j, ++k) dst[k] = src[k] - mu[i] - mu[j] + g + beta_offdiag;
    }
    return out;
}

}  // namespace

CenteredKernel double_center(const PackedSym& m) { return center_impl(m, false); }

CenteredKernel triple_center(const PackedSym& m) { return center_impl(m, true); }

double variance_epsilon(const PackedSym& m) { return 1e-14 * m.mean_square(); }

CenteredStats double_center_stats(const PackedSym& m) {
    CenteredStats s;
    s.centered = double_center(m);
    s.variance = PackedSym::dot_mean(s.centered.m, s.centered.m);
    s.epsilon = variance_epsilon(m);
    return s;
}

CenteredStats triple_center_stats(const PackedSym& m) {
    CenteredStats s;
    s.centered = triple_center(m);
    s.variance = PackedSym::dot_mean(s.centered.m, s.centered.m);
    s.epsilon = variance_epsilon(m);
    return s;
}

}  // namespace simcorr
