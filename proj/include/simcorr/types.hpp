#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace simcorr {

// Thrown when two sample sets disagree on sample count, or a kernel
// configuration pair disagrees on the exponent.
struct SizeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown on invalid numeric configuration (non-positive scale, bad grid, ...).
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when input data fails validation (non-finite entries, bad shapes).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// One group of variables: N samples of dimension p, row-major.
class SampleSet {
  public:
    SampleSet(int n, int p, std::vector<double> values) : n_(n), p_(p), v_(std::move(values)) {
        if (n_ < 2) throw SizeError("sample set needs at least 2 samples");
        if (p_ < 1) throw SizeError("sample set needs at least 1 variable");
        if (v_.size() != static_cast<size_t>(n_) * p_)
            throw SizeError("sample set value count does not match n*p");
        for (double v : v_)
            if (!std::isfinite(v)) throw InputError("sample set entries must be finite");
    }

    int n() const { return n_; }
    int p() const { return p_; }
    double at(int i, int j) const { return v_[static_cast<size_t>(i) * p_ + j]; }
    double& at(int i, int j) { return v_[static_cast<size_t>(i) * p_ + j]; }
    const std::vector<double>& values() const { return v_; }

  private:
    int n_;
    int p_;
    std::vector<double> v_;
};

// N complex vectors of dimension p, stored as paired real/imaginary parts.
class ComplexSampleSet {
  public:
    ComplexSampleSet(SampleSet re, SampleSet im) : re_(std::move(re)), im_(std::move(im)) {
        if (re_.n() != im_.n() || re_.p() != im_.p())
            throw SizeError("real and imaginary parts must have identical dimensions");
    }

    int n() const { return re_.n(); }
    int p() const { return re_.p(); }
    const SampleSet& re() const { return re_; }
    const SampleSet& im() const { return im_; }

  private:
    SampleSet re_;
    SampleSet im_;
};

enum class KernelFamily { exponential, biweight };

struct KernelConfig {
    KernelFamily family = KernelFamily::exponential;
    double alpha = 2.0;  // distance exponent
    double scale = 1.0;  // kernel bandwidth s

    void validate() const {
        if (!(alpha > 0)) throw ConfigError("kernel exponent must be positive");
        if (!(scale > 0)) throw ConfigError("kernel scale must be positive");
    }
};

enum class Measure {
    distance_corr,
    similarity_corr,
    modified_similarity_corr,
    rv,
};

struct AssociationEstimate {
    Measure measure = Measure::distance_corr;
    double value = 0.0;
    bool degenerate = false;          // true ⇒ value forced to 0 by the zero branch
    std::optional<double> alpha;      // distance exponent, when applicable
    std::optional<double> s_x;        // optimal/used scale for the X group (raw units)
    std::optional<double> s_y;        // optimal/used scale for the Y group (raw units)
};

// Log-spaced search grid for scale parameters.
struct ScaleGrid {
    double log10_min = -4.0;
    double log10_max = 4.0;
    int points_per_axis = 33;
    int refine_iterations = 3;
    double refine_tolerance = 1e-3;

    void validate() const {
        if (!(log10_min < log10_max)) throw ConfigError("grid: log10_min must be < log10_max");
        if (points_per_axis < 3) throw ConfigError("grid: need at least 3 points per axis");
        if (refine_iterations < 0) throw ConfigError("grid: refine iterations must be >= 0");
        if (!(refine_tolerance > 0)) throw ConfigError("grid: refine tolerance must be positive");
    }
};

struct SurfaceSample {
    double log10_sx = 0.0;
    double log10_sy = 0.0;
    double value = 0.0;
};

enum class CoherenceMeasure { similarity, distance };

struct CoherenceBreakdown {
    double total = 0.0;
    double real_part = 0.0;
    double imag_part = 0.0;
    std::optional<double> s_x;  // absent for the distance measure or degenerate results
    std::optional<double> s_y;
    CoherenceMeasure measure = CoherenceMeasure::similarity;
    bool degenerate = false;            // every grid cell degenerate (or variance zero)
    bool partition_degenerate = false;  // |w_re + w_im| vanished; equal split reported
};

}  // namespace simcorr
