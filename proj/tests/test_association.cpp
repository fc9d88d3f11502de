#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracle.hpp"
#include "simcorr/association.hpp"
#include "simcorr/types.hpp"

using namespace simcorr;

namespace {

SampleSet random_set(int n, int p, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::vector<double> v(static_cast<size_t>(n) * p);
    for (double& e : v) e = u(rng);
    return SampleSet(n, p, std::move(v));
}

// Regular tetrahedron: four points, all pairwise distances sqrt(8).
SampleSet tetrahedron() {
    return SampleSet(4, 3,
                     {1, 1, 1,   //
                      1, -1, -1, //
                      -1, 1, -1, //
                      -1, -1, 1});
}

KernelConfig exp_cfg(double alpha, double scale) {
    KernelConfig c;
    c.alpha = alpha;
    c.scale = scale;
    return c;
}

}  // namespace

TEST_CASE("distance covariance of a set with itself is its variance") {
    const SampleSet x = random_set(15, 2, 1);
    CHECK(distance_covariance(x, x) == doctest::Approx(distance_variance(x)).epsilon(1e-14));
    CHECK(distance_variance(x) > 0.0);
}

TEST_CASE("equidistant points: distance variance is a^2 (N-1)/N^2") {
    // tetrahedron, a = sqrt(8), N = 4: V = 8 * 3 / 16 = 1.5
    CHECK(distance_variance(tetrahedron()) == doctest::Approx(1.5).epsilon(1e-14));

    // two points at distance 3: V = 9 / 4
    const SampleSet two(2, 1, {0.0, 3.0});
    CHECK(distance_variance(two) == doctest::Approx(2.25).epsilon(1e-14));
}

TEST_CASE("exact linear relation gives distance correlation 1") {
    const SampleSet x = random_set(40, 1, 2);
    std::vector<double> yv(40), zv(40);
    for (int i = 0; i < 40; ++i) {
        yv[i] = 2.0 * x.at(i, 0) - 1.0;
        zv[i] = -0.7 * x.at(i, 0) + 5.0;  // negative slope: distances are unchanged
    }
    const AssociationEstimate ry = distance_correlation(x, SampleSet(40, 1, std::move(yv)));
    const AssociationEstimate rz = distance_correlation(x, SampleSet(40, 1, std::move(zv)));
    CHECK(ry.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rz.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(ry.degenerate);
}

TEST_CASE("constant factor takes the degenerate zero branch") {
    const SampleSet x = random_set(12, 1, 3);
    const SampleSet y(12, 1, std::vector<double>(12, 4.2));
    const AssociationEstimate r = distance_correlation(x, y);
    CHECK(r.degenerate);
    CHECK(r.value == 0.0);

    const AssociationEstimate rr = rv_coefficient(x, y);
    CHECK(rr.degenerate);
    CHECK(rr.value == 0.0);
}

TEST_CASE("equidistant points are similarity-degenerate but not distance-degenerate") {
    const SampleSet t = tetrahedron();
    const SampleSet y = random_set(4, 1, 4);

    CHECK(distance_variance(t) > 0.5);           // distance flavour sees structure
    for (double s : {0.1, 1.0, 10.0}) {
        // the kernel of an equidistant set is I + c(ones - I): triple centering kills it
        CHECK(similarity_variance(t, exp_cfg(2.0, s)) <= 1e-14);
        CHECK(std::fabs(similarity_covariance(t, y, exp_cfg(2.0, s), exp_cfg(2.0, s))) <= 1e-12);
        CHECK(similarity_correlation_at(t, y, 2.0, s, s) == 0.0);  // degenerate ratio
    }
}

TEST_CASE("similarity covariance rejects mismatched inputs") {
    const SampleSet x = random_set(8, 1, 5);
    const SampleSet y = random_set(9, 1, 6);
    CHECK_THROWS_AS(similarity_covariance(x, y, exp_cfg(2, 1), exp_cfg(2, 1)), SizeError);
    const SampleSet y8 = random_set(8, 1, 7);
    CHECK_THROWS_AS(similarity_covariance(x, y8, exp_cfg(2, 1), exp_cfg(1, 1)), SizeError);
    CHECK_NOTHROW(similarity_covariance(x, y8, exp_cfg(2, 1), exp_cfg(2, 4)));
}

TEST_CASE("similarity covariance satisfies Cauchy-Schwarz") {
    for (unsigned seed = 10; seed < 16; ++seed) {
        const SampleSet x = random_set(14, 2, seed);
        const SampleSet y = random_set(14, 1, seed + 100);
        for (double sx : {0.3, 2.0}) {
            for (double sy : {0.5, 5.0}) {
                const double cov = similarity_covariance(x, y, exp_cfg(2, sx), exp_cfg(2, sy));
                const double vx = similarity_variance(x, exp_cfg(2, sx));
                const double vy = similarity_variance(y, exp_cfg(2, sy));
                CHECK(cov * cov <= vx * vy * (1.0 + 1e-12));
                const double r = similarity_correlation_at(x, y, 2.0, sx, sy);
                CHECK(r <= 1.0 + 1e-12);
                CHECK(r >= -1.0 - 1e-12);
            }
        }
    }
}

TEST_CASE("vanishing scale degenerates the similarity correlation") {
    const SampleSet x = random_set(10, 1, 20);
    const SampleSet y = random_set(10, 1, 21);
    CHECK(similarity_correlation_at(x, y, 2.0, 1e-30, 1e-30) == 0.0);
}

TEST_CASE("modified similarity correlation is 1 on identical sets") {
    const SampleSet x = random_set(25, 1, 30);
    CHECK(modified_similarity_correlation(x, x, 1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    const AssociationEstimate e = modified_similarity_estimate(x, x, 2.0, 2.0);
    CHECK(e.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(e.measure == Measure::modified_similarity_corr);
    CHECK(e.s_x.has_value());
    CHECK(*e.s_x == 2.0);
}

TEST_CASE("modified similarity correlation approaches the distance correlation") {
    const SampleSet x = random_set(30, 1, 40);
    std::vector<double> yv(30);
    for (int i = 0; i < 30; ++i) {
        const double t = x.at(i, 0);
        yv[i] = t * t + 0.25 * t;
    }
    const SampleSet y(30, 1, std::move(yv));
    const double dc = distance_correlation(x, y).value;

    double maxd = 0.0;
    {
        const PairwiseMatrix d = pairwise_distances(x);
        maxd = d.m.max_abs();
        const PairwiseMatrix dy = pairwise_distances(y);
        maxd = std::max(maxd, dy.m.max_abs());
    }
    const double e2 = std::fabs(modified_similarity_correlation(x, y, 1e2 * maxd, 1e2 * maxd) - dc);
    const double e4 = std::fabs(modified_similarity_correlation(x, y, 1e4 * maxd, 1e4 * maxd) - dc);
    const double e6 = std::fabs(modified_similarity_correlation(x, y, 1e6 * maxd, 1e6 * maxd) - dc);
    CHECK(e6 <= 1e-4);
    CHECK(e4 <= e2 + 1e-12);  // error shrinks as the scales grow
    CHECK(e6 <= e4 + 1e-12);
}

TEST_CASE("rv coefficient equals squared Pearson correlation in one dimension") {
    for (unsigned seed = 50; seed < 55; ++seed) {
        const SampleSet x = random_set(20, 1, seed);
        const SampleSet y = random_set(20, 1, seed + 200);
        const double r = oracle::pearson(x.values(), y.values());
        const AssociationEstimate rv = rv_coefficient(x, y);
        CHECK(rv.value == doctest::Approx(r * r).epsilon(1e-12));
    }
    const SampleSet x = random_set(20, 3, 60);
    CHECK(rv_coefficient(x, x).value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("covariances are symmetric in their arguments") {
    const SampleSet x = random_set(12, 2, 70);
    const SampleSet y = random_set(12, 1, 71);
    CHECK(distance_covariance(x, y) == doctest::Approx(distance_covariance(y, x)).epsilon(1e-14));
    CHECK(similarity_covariance(x, y, exp_cfg(2, 0.7), exp_cfg(2, 1.3)) ==
          doctest::Approx(similarity_covariance(y, x, exp_cfg(2, 1.3), exp_cfg(2, 0.7)))
              .epsilon(1e-14));
    CHECK(distance_correlation(x, y).value ==
          doctest::Approx(distance_correlation(y, x).value).epsilon(1e-14));
    CHECK(rv_coefficient(x, y).value ==
          doctest::Approx(rv_coefficient(y, x).value).epsilon(1e-14));
}

TEST_CASE("library results match the dense explicit-H reference") {
    std::mt19937 pick(99);
    for (int t = 0; t < 12; ++t) {
        const int n = 4 + static_cast<int>(pick() % 7);
        const int p = 1 + static_cast<int>(pick() % 3);
        const int q = 1 + static_cast<int>(pick() % 2);
        const SampleSet x = random_set(n, p, 300 + t);
        const SampleSet y = random_set(n, q, 400 + t);

        CHECK(distance_covariance(x, y) == doctest::Approx(oracle::dcov(x, y)).epsilon(1e-10));
        CHECK(distance_variance(x) == doctest::Approx(oracle::dvar(x)).epsilon(1e-10));
        CHECK(distance_correlation(x, y).value ==
              doctest::Approx(oracle::dcorr(x, y)).epsilon(1e-10));

        const double sx = 0.5 + 0.2 * t, sy = 1.5;
        CHECK(similarity_covariance(x, y, exp_cfg(2, sx), exp_cfg(2, sy)) ==
              doctest::Approx(oracle::scov(x, y, 2.0, sx, sy)).epsilon(1e-10));
        CHECK(similarity_variance(x, exp_cfg(2, sx)) ==
              doctest::Approx(oracle::svar(x, 2.0, sx)).epsilon(1e-10));
        CHECK(similarity_correlation_at(x, y, 2.0, sx, sy) ==
              doctest::Approx(oracle::scorr_at(x, y, 2.0, sx, sy)).epsilon(1e-10));
        CHECK(modified_similarity_correlation(x, y, sx, sy) ==
              doctest::Approx(oracle::modified_scorr(x, y, sx, sy)).epsilon(1e-10));
        CHECK(rv_coefficient(x, y).value == doctest::Approx(oracle::rv(x, y)).epsilon(1e-10));
    }
}
