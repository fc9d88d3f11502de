#pragma once

// Brute-force reference implementations used only by the test suite.
// Everything here is dense, materializes the centering matrix H explicitly,
// and favors obvious code over speed, so library results can be checked
// against an independent computation path.

#include <cmath>
#include <vector>

#include "simcorr/types.hpp"

namespace oracle {

using Mat = std::vector<std::vector<double>>;

inline Mat zeros(int n) { return Mat(static_cast<size_t>(n), std::vector<double>(n, 0.0)); }

inline Mat matmul(const Mat& a, const Mat& b) {
    const int n = static_cast<int>(a.size());
    Mat c = zeros(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline Mat centering_matrix(int n) {
    Mat h = zeros(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h[i][j] = (i == j ? 1.0 : 0.0) - 1.0 / n;
    return h;
}

inline Mat distances(const simcorr::SampleSet& x) {
    const int n = x.n();
    Mat d = zeros(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int k = 0; k < x.p(); ++k) {
                const double diff = x.at(i, k) - x.at(j, k);
                acc += diff * diff;
            }
            d[i][j] = std::sqrt(acc);
        }
    }
    return d;
}

inline Mat kernel(const Mat& d, double alpha, double scale, bool biweight = false) {
    const int n = static_cast<int>(d.size());
    Mat m = zeros(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double u = std::pow(d[i][j], alpha) / scale;
            m[i][j] = biweight ? (u < 1.0 ? (1.0 - u) * (1.0 - u) : 0.0) : std::exp(-u);
        }
    }
    return m;
}

inline Mat double_center(const Mat& m) {
    const Mat h = centering_matrix(static_cast<int>(m.size()));
    return matmul(matmul(h, m), h);
}

inline double trace(const Mat& m) {
    double t = 0.0;
    for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

inline Mat triple_center(const Mat& m) {
    const int n = static_cast<int>(m.size());
    Mat p = double_center(m);
    const double beta = trace(p) / (n - 1);
    const Mat h = centering_matrix(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p[i][j] -= beta * h[i][j];
    return p;
}

inline double mean_prod(const Mat& a, const Mat& b) {
    const int n = static_cast<int>(a.size());
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) acc += a[i][j] * b[i][j];
    return acc / (static_cast<double>(n) * n);
}

inline double dcov(const simcorr::SampleSet& x, const simcorr::SampleSet& y) {
    return mean_prod(double_center(distances(x)), double_center(distances(y)));
}

inline double dvar(const simcorr::SampleSet& x) { return dcov(x, x); }

inline double dcorr(const simcorr::SampleSet& x, const simcorr::SampleSet& y) {
    const double vx = dvar(x), vy = dvar(y);
    if (vx * vy <= 0) return 0.0;
    return dcov(x, y) / std::sqrt(vx * vy);
}

inline double scov(const simcorr::SampleSet& x, const simcorr::SampleSet& y, double alpha,
                   double s_x, double s_y) {
    const Mat dx = triple_center(kernel(distances(x), alpha, s_x));
    const Mat ey = triple_center(kernel(distances(y), alpha, s_y));
    return mean_prod(dx, ey);
}

inline double svar(const simcorr::SampleSet& x, double alpha, double s) {
    return scov(x, x, alpha, s, s);
}

inline double scorr_at(const simcorr::SampleSet& x, const simcorr::SampleSet& y, double alpha,
                       double s_x, double s_y) {
    const double vx = svar(x, alpha, s_x), vy = svar(y, alpha, s_y);
    if (vx * vy <= 0) return 0.0;
    return scov(x, y, alpha, s_x, s_y) / std::sqrt(vx * vy);
}

inline double modified_scorr(const simcorr::SampleSet& x, const simcorr::SampleSet& y, double s_x,
                             double s_y) {
    const Mat a = double_center(kernel(distances(x), 1.0, s_x));
    const Mat b = double_center(kernel(distances(y), 1.0, s_y));
    const double vx = mean_prod(a, a), vy = mean_prod(b, b);
    if (vx * vy <= 0) return 0.0;
    return mean_prod(a, b) / std::sqrt(vx * vy);
}

inline Mat gram(const simcorr::SampleSet& x) {
    const int n = x.n();
    Mat g = zeros(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int k = 0; k < x.p(); ++k) acc += x.at(i, k) * x.at(j, k);
            g[i][j] = acc;
        }
    return g;
}

inline double rv(const simcorr::SampleSet& x, const simcorr::SampleSet& y) {
    const Mat gx = double_center(gram(x));
    const Mat gy = double_center(gram(y));
    const double vx = mean_prod(gx, gx), vy = mean_prod(gy, gy);
    if (vx * vy <= 0) return 0.0;
    return mean_prod(gx, gy) / std::sqrt(vx * vy);
}

inline double pearson(const std::vector<double>& a, const std::vector<double>& b) {
    const size_t n = a.size();
    double ma = 0, mb = 0;
    for (size_t i = 0; i < n; ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= static_cast<double>(n);
    mb /= static_cast<double>(n);
    double sab = 0, saa = 0, sbb = 0;
    for (size_t i = 0; i < n; ++i) {
        sab += (a[i] - ma) * (b[i] - mb);
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
    }
    return sab / std::sqrt(saa * sbb);
}

}  // namespace oracle
