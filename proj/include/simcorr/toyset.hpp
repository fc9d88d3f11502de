#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simcorr/types.hpp"

namespace simcorr {

// Deterministic benchmark datasets. All randomness flows through SplitMix64
// seeded per generate call, so identical specs produce identical samples on
// every platform.

enum class ToyName {
    line,
    x_shape,
    line_plus_sine,
    random_dots,
    circle,
    paraboloid,
    cx_linear,
    cx_quadratic,
    cx_sqrt,
    cx_log,
};

// Convention for the complex-log map y = a·w, selecting how the angle of x
// enters w. CLI names in parentheses.
//   principal  ("principal"): w = ln|x| + i·atan2(Im x, Re x), angle ∈ (−π, π]
//   real_sum   ("paper"):     w = ln|x| + atan2(Im x, Re x), angle added as a
//                             real term (no imaginary unit), so w is real
//   half_plane ("atan"):      w = ln|x| + i·atan(Im x / Re x), half-plane
//                             angle ∈ (−π/2, π/2)
enum class LogForm {
    principal,
    real_sum,
    half_plane,
};

struct ToySpec {
    ToyName name = ToyName::line;
    int n = 0;  // 0 → the per-name default size
    double noise_beta = 0.0;
    std::uint64_t seed = 1;
    LogForm log_form = LogForm::principal;
};

// Name ↔ string, as used by the CLI.
std::string to_string(ToyName name);
std::optional<ToyName> toy_name_from_string(const std::string& s);
std::string to_string(LogForm form);
std::optional<LogForm> log_form_from_string(const std::string& s);

bool is_complex_toy(ToyName name);

// Default sample count for a name (e.g. grid datasets use 900 = 30×30).
int default_toy_size(ToyName name);

// Real-valued datasets: x and y sides with matching row counts.
// Throws ConfigError for complex names or invalid sizes (x_shape/circle need
// even n; paraboloid needs a perfect square).
struct ToyReal {
    SampleSet x;
    SampleSet y;
};
ToyReal generate_real(const ToySpec& spec);

// Complex-valued datasets: x on a fixed grid, y = f(x).
struct ToyComplex {
    ComplexSampleSet x;
    ComplexSampleSet y;
};
ToyComplex generate_complex(const ToySpec& spec);

// The map y = f(x) of a complex toy applied to one point (map-level tests).
struct Cx {
    double re = 0.0;
    double im = 0.0;
};
Cx cx_apply(ToyName name, Cx x, LogForm form = LogForm::principal);

// --- deterministic RNG ------------------------------------------------------

// SplitMix64: tiny, seedable, reproducible across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64();
    double next_u01();  // uniform on [0, 1) with 53 random bits

private:
    std::uint64_t state_;
};

// One uniform noise draw on [−beta, beta).
double uniform_noise(SplitMix64& rng, double beta);

}  // namespace simcorr
