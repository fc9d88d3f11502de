#include "simcorr/toyset.hpp"

#include <algorithm>
#include <cmath>

namespace simcorr {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::uint64_t SplitMix64::next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::next_u01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double uniform_noise(SplitMix64& rng, double beta) { return (2.0 * rng.next_u01() - 1.0) * beta; }

std::string to_string(ToyName name) {
    switch (name) {
        case ToyName::line: return "line";
        case ToyName::x_shape: return "x_shape";
        case ToyName::line_plus_sine: return "line_plus_sine";
        case ToyName::random_dots: return "random_dots";
        case ToyName::circle: return "circle";
        case ToyName::paraboloid: return "paraboloid";
        case ToyName::cx_linear: return "cx_linear";
        case ToyName::cx_quadratic: return "cx_quadratic";
        case ToyName::cx_sqrt: return "cx_sqrt";
        case ToyName::cx_log: return "cx_log";
    }
    return "?";
}

std::optional<ToyName> toy_name_from_string(const std::string& s) {
    for (ToyName t : {ToyName::line, ToyName::x_shape, ToyName::line_plus_sine,
                      ToyName::random_dots, ToyName::circle, ToyName::paraboloid,
                      ToyName::cx_linear, ToyName::cx_quadratic, ToyName::cx_sqrt,
                      ToyName::cx_log}) {
        if (to_string(t) == s) return t;
    }
    return std::nullopt;
}

std::string to_string(LogForm form) {
    switch (form) {
        case LogForm::principal: return "principal";
        case LogForm::real_sum: return "paper";
        case LogForm::half_plane: return "atan";
    }
    return "?";
}

std::optional<LogForm> log_form_from_string(const std::string& s) {
    for (LogForm f : {LogForm::principal, LogForm::real_sum, LogForm::half_plane})
        if (to_string(f) == s) return f;
    return std::nullopt;
}

bool is_complex_toy(ToyName name) {
    switch (name) {
        case ToyName::cx_linear:
        case ToyName::cx_quadratic:
        case ToyName::cx_sqrt:
        case ToyName::cx_log:
            return true;
        default:
            return false;
    }
}

int default_toy_size(ToyName name) {
    switch (name) {
        case ToyName::line: return 1000;
        case ToyName::x_shape: return 2000;
        case ToyName::line_plus_sine: return 1000;
        case ToyName::random_dots: return 2000;
        case ToyName::circle: return 2000;
        case ToyName::paraboloid: return 900;
        default: return 900;  // all complex toys: 30×30 grid
    }
}

namespace {

int resolved_size(const ToySpec& spec) { return spec.n > 0 ? spec.n : default_toy_size(spec.name); }

int exact_sqrt(int n) {
    int g = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    while (g * g > n) --g;
    while ((g + 1) * (g + 1) <= n) ++g;
    return g * g == n ? g : 0;
}

SampleSet column(std::vector<double> v) {
    const int n = static_cast<int>(v.size());
    return SampleSet(n, 1, std::move(v));
}

}  // namespace

Cx cx_apply(ToyName name, Cx x, LogForm form) {
    const double ar = 0.5, ai = -1.0;  // coefficient a = 0.5 − i
    double wr = 0.0, wi = 0.0;
    switch (name) {
        case ToyName::cx_linear:
            wr = x.re;
            wi = x.im;
            break;
        case ToyName::cx_quadratic:
            wr = x.re * x.re - x.im * x.im;
            wi = 2.0 * x.re * x.im;
            break;
        case ToyName::cx_sqrt: {
            const double r = std::hypot(x.re, x.im);
            const double sign = x.im < 0 ? -1.0 : 1.0;  // sign(0) taken as +1
            wr = std::sqrt(std::max(0.0, (r + x.re) / 2.0));
            wi = sign * std::sqrt(std::max(0.0, (r - x.re) / 2.0));
            break;
        }
        case ToyName::cx_log: {
            const double lr = std::log(std::hypot(x.re, x.im));
            switch (form) {
                case LogForm::principal:
                    wr = lr;
                    wi = std::atan2(x.im, x.re);
                    break;
                case LogForm::real_sum:
                    wr = lr + std::atan2(x.im, x.re);
                    wi = 0.0;
                    break;
                case LogForm::half_plane:
                    wr = lr;
                    wi = std::atan(x.im / x.re);
                    break;
            }
            break;
        }
        default:
            throw ConfigError("cx_apply requires a complex toy name");
    }
    return Cx{ar * wr - ai * wi, ar * wi + ai * wr};
}

ToyReal generate_real(const ToySpec& spec) {
    if (is_complex_toy(spec.name)) throw ConfigError("generate_real requires a real-valued toy");
    if (spec.noise_beta < 0) throw ConfigError("noise half-width must be non-negative");
    const int n = resolved_size(spec);
    SplitMix64 rng(spec.seed);

    std::vector<double> xs, ys;
    int xdim = 1;
    switch (spec.name) {
        case ToyName::line: {
            if (n < 2) throw ConfigError("line needs n >= 2");
            for (int i = 0; i < n; ++i) {
                const double x = static_cast<double>(i) / (n - 1);
                xs.push_back(x);
                ys.push_back(x);
            }
            break;
        }
        case ToyName::x_shape: {
            const int h = n / 2;
            if (n < 4 || n % 2 != 0) throw ConfigError("x_shape needs even n >= 4");
            for (int i = 0; i < h; ++i) xs.push_back(static_cast<double>(i) / (h - 1));
            for (int i = 0; i < h; ++i) xs.push_back(static_cast<double>(i) / (h - 1));
            for (int i = 0; i < h; ++i) ys.push_back(xs[i]);            // branch 1: y = x
            for (int i = 0; i < h; ++i) ys.push_back(1.0 - xs[i]);      // branch 2: y = 1 − x
            break;
        }
        case ToyName::line_plus_sine: {
            if (n < 2) throw ConfigError("line_plus_sine needs n >= 2");
            for (int i = 0; i < n; ++i) {
                const double x = static_cast<double>(i) / (n - 1);
                xs.push_back(x);
                ys.push_back(std::sin(7.0 * kPi * x) + x);
            }
            break;
        }
        case ToyName::random_dots: {
            if (n < 2) throw ConfigError("random_dots needs n >= 2");
            for (int i = 0; i < n; ++i) xs.push_back(rng.next_u01());
            for (int i = 0; i < n; ++i) ys.push_back(rng.next_u01());
            break;
        }
        case ToyName::circle: {
            const int h = n / 2;
            if (n < 4 || n % 2 != 0) throw ConfigError("circle needs even n >= 4");
            for (int i = 0; i < h; ++i)
                xs.push_back(2.0 * static_cast<double>(i) / (h - 1) - 1.0);
            for (int i = 0; i < h; ++i) xs.push_back(xs[i]);
            for (int i = 0; i < h; ++i)
                ys.push_back(std::sqrt(std::max(0.0, 1.0 - xs[i] * xs[i])));
            for (int i = 0; i < h; ++i) ys.push_back(-ys[i]);
            break;
        }
        case ToyName::paraboloid: {
            const int g = exact_sqrt(n);
            if (g < 2) throw ConfigError("paraboloid needs a perfect-square n >= 4");
            xdim = 2;
            for (int a = 0; a < g; ++a) {
                const double va = 2.0 * static_cast<double>(a) / (g - 1) - 1.0;
                for (int b = 0; b < g; ++b) {
                    const double vb = 2.0 * static_cast<double>(b) / (g - 1) - 1.0;
                    xs.push_back(va);
                    xs.push_back(vb);
                    ys.push_back(va * va + vb * vb);
                }
            }
            break;
        }
        default:
            throw ConfigError("unknown toy name");
    }

    if (spec.noise_beta > 0) {
        for (double& y : ys) y += uniform_noise(rng, spec.noise_beta);
    }
    return ToyReal{SampleSet(n, xdim, std::move(xs)), column(std::move(ys))};
}

ToyComplex generate_complex(const ToySpec& spec) {
    if (!is_complex_toy(spec.name)) throw ConfigError("generate_complex requires a complex toy");
    if (spec.noise_beta < 0) throw ConfigError("noise half-width must be non-negative");
    const int n = resolved_size(spec);
    if (n != 900) throw ConfigError("complex toys are defined on the 900-point (30x30) grid");
    const int g = 30;
    SplitMix64 rng(spec.seed);

    std::vector<double> xre, xim, yre, yim;
    xre.reserve(n);
    xim.reserve(n);
    yre.reserve(n);
    yim.reserve(n);
    for (int a = 0; a < g; ++a) {
        const double re = 2.0 * static_cast<double>(a) / (g - 1) - 1.0;
        for (int b = 0; b < g; ++b) {
            const double im = 2.0 * static_cast<double>(b) / (g - 1) - 1.0;
            const Cx y = cx_apply(spec.name, Cx{re, im}, spec.log_form);
            xre.push_back(re);
            xim.push_back(im);
            yre.push_back(y.re);
            yim.push_back(y.im);
        }
    }
    if (spec.noise_beta > 0) {
        for (int i = 0; i < n; ++i) {  // per sample: real coordinate, then imaginary
            yre[i] += uniform_noise(rng, spec.noise_beta);
            yim[i] += uniform_noise(rng, spec.noise_beta);
        }
    }
    return ToyComplex{
        ComplexSampleSet(column(std::move(xre)), column(std::move(xim))),
        ComplexSampleSet(column(std::move(yre)), column(std::move(yim))),
    };
}

}  // namespace simcorr
