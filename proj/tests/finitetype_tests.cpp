#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gaussmap/finitetype.hpp"
#include "support.hpp"

using namespace gaussmap;

TEST_CASE("sample_points is deterministic and respects rejection") {
    const auto s = SurfacePatch::quadric1(-1, -1, 1);
    const auto p1 = sample_points(s, 50, 7);
    const auto p2 = sample_points(s, 50, 7);
    REQUIRE(p1.size() == 50);
    CHECK(p1 == p2);
    for (auto [u, v] : p1) {
        CHECK(1.0 - u * u - v * v >= SurfacePatch::kRadicandFloor);
    }
    const auto p3 = sample_points(s, 50, 8);
    CHECK(p1 != p3);
}

TEST_CASE("sample_points fills an unconstrained domain") {
    const auto s = SurfacePatch::quadric2(1, 1);
    const auto pts = sample_points(s, 100, 42);
    REQUIRE(pts.size() == 100);
    for (auto [u, v] : pts) {
        CHECK(u >= -2.0);
        CHECK(u <= 2.0);
        CHECK(v >= -2.0);
        CHECK(v <= 2.0);
    }
}

TEST_CASE("sample_points precondition") {
    CHECK_THROWS_AS(sample_points(SurfacePatch::plane(), 4, 1),
                    std::invalid_argument);
}

TEST_CASE("sphere fit recovers the closed-form matrix") {
    const auto s = SurfacePatch::quadric1(-1, -1, 4.0);
    const LambdaFit fit = fit_lambda(s, sample_points(s, 100, kDefaultSeed));
    CHECK(fit.verdict == FitVerdict::Satisfies);
    CHECK(fit.design_rank == 3);
    CHECK(fit.residual_rms <= 1e-8);
    CHECK((fit.lambda - 0.5 * Mat3::Identity()).norm() < 1e-7);
    CHECK(fit.target_identity_dev <= 1e-8);
}

TEST_CASE("plane fit is rank deficient and indeterminate") {
    const auto s = SurfacePatch::plane();
    const LambdaFit fit = fit_lambda(s, sample_points(s, 60, kDefaultSeed));
    CHECK(fit.verdict == FitVerdict::Indeterminate);
    CHECK(fit.design_rank == 1);
    CHECK(fit.lambda.norm() < 1e-12);  // minimum-norm solution of 0 targets
    CHECK(fit.note.find("rank-deficient") != std::string::npos);
}

TEST_CASE("elliptic paraboloid fit fails") {
    const auto s = SurfacePatch::quadric2(1, 1);
    const LambdaFit fit = fit_lambda(s, sample_points(s, 100, kDefaultSeed));
    CHECK(fit.verdict == FitVerdict::Fails);
    CHECK(fit.residual_rms > 1e-3);
    // The fit fails because no constant matrix exists, not because the
    // Laplacian targets drifted off the structural identity.
    CHECK(fit.target_identity_dev <= 1e-8);
}

TEST_CASE("generic kind-I quadric fit fails") {
    const auto s = SurfacePatch::quadric1(2, 1, 1);
    const LambdaFit fit = fit_lambda(s, sample_points(s, 100, kDefaultSeed));
    CHECK(fit.verdict == FitVerdict::Fails);
    CHECK(fit.residual_rms > 1e-3);
}

TEST_CASE("cylinder fit is subspace-satisfied with the tube eigenvalue") {
    // Delta n = (1/r^2) n on the circular cylinder; the normals span only
    // the cross-section plane, so the matrix cannot be unique.
    const double r = 2.0;
    const auto s = SurfacePatch::circular_cylinder(r);
    const LambdaFit fit = fit_lambda(s, sample_points(s, 100, kDefaultSeed));
    CHECK(fit.verdict == FitVerdict::Indeterminate);
    CHECK(fit.design_rank == 2);
    CHECK(fit.subspace_satisfied);
    CHECK(fit.residual_rms <= 1e-8);
    Mat3 want = Mat3::Zero();
    want(0, 0) = want(1, 1) = 1.0 / (r * r);
    CHECK((fit.lambda - want).norm() < 1e-7);
}

TEST_CASE("helicoid fit reported without asserting the dichotomy") {
    // Pointwise Delta n = 2 p^2/(p^2+v^2)^2 n: an eigenvector everywhere
    // but with a v-dependent coefficient, so no constant matrix works on a
    // two-dimensional patch. Record the observed residual only.
    const auto s = SurfacePatch::helicoid(1.0);
    const LambdaFit fit = fit_lambda(s, sample_points(s, 100, kDefaultSeed));
    CHECK(fit.residual_rms > 1e-3);
    MESSAGE("helicoid residual_rms = " << fit.residual_rms
                                       << ", verdict = "
                                       << verdict_name(fit.verdict));
}

TEST_CASE("scale equivariance of the least-squares fit") {
    const auto s = SurfacePatch::quadric1(2, 1, 1);
    auto samples = collect_samples(s, sample_points(s, 80, kDefaultSeed));
    const LambdaFit base = fit_lambda_from_samples(samples);
    const double scale = 3.5;
    auto scaled = samples;
    for (auto& sm : scaled) sm.target *= scale;
    const LambdaFit sfit = fit_lambda_from_samples(scaled);
    CHECK((sfit.lambda - scale * base.lambda).norm() <=
          1e-10 * (1 + base.lambda.norm()));
    // Normalization divides by RMS|target| + 1, which is not homogeneous;
    // compare the unnormalized residuals instead, which scale exactly.
    const double rms_t = [&] {
        double acc = 0;
        for (const auto& sm : samples) acc += sm.target.squaredNorm();
        return std::sqrt(acc / samples.size());
    }();
    const double raw_base = base.residual_rms * (rms_t + 1.0);
    const double raw_scaled = sfit.residual_rms * (scale * rms_t + 1.0);
    CHECK(std::abs(raw_scaled - scale * raw_base) <=
          1e-10 * (1.0 + scale * raw_base));
}

TEST_CASE("sphere fit is stable across seeds") {
    const auto s = SurfacePatch::quadric1(-1, -1, 4.0);
    Mat3 first;
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        const LambdaFit fit = fit_lambda(s, sample_points(s, 100, seed));
        if (seed == 1)
            first = fit.lambda;
        else
            CHECK((fit.lambda - first).cwiseAbs().maxCoeff() < 1e-7);
    }
}

TEST_CASE("classification of the kind-I grid flags only the sphere fiber") {
    GridSpec grid;
    grid.a_values = {-1.5, -1.0, -0.5, 1.0};
    grid.b_values = {-1.5, -1.0, -0.5, 1.0};
    grid.c_values = {1.0, 4.0};
    const ClassificationReport rep = classify_family("quadric1", grid, 60);
    REQUIRE(rep.rows.size() == 32);
    int flagged = 0;
    for (const auto& row : rep.rows) {
        if (row.flagged) {
            ++flagged;
            CHECK(row.a == -1.0);
            CHECK(row.b == -1.0);
            const Mat3 want = (2.0 / row.c) * Mat3::Identity();
            CHECK((row.fit.lambda - want).norm() < 1e-6);
        }
    }
    CHECK(flagged == 2);  // one per c value
}

TEST_CASE("classification of the kind-II grid flags nothing") {
    GridSpec grid;
    grid.a_values = {0.5, 1.0, 2.0};
    grid.b_values = {0.5, 1.0, 2.0};
    const ClassificationReport rep = classify_family("quadric2", grid, 60);
    REQUIRE(rep.rows.size() == 9);
    for (const auto& row : rep.rows) {
        CHECK_FALSE(row.flagged);
        CHECK(row.fit.verdict == FitVerdict::Fails);
    }
}

TEST_CASE("degenerate grid requests are rejected") {
    GridSpec grid;
    grid.a_values = {0.0, 1.0};
    grid.b_values = {1.0};
    grid.c_values = {1.0};
    CHECK_THROWS_AS(classify_family("quadric1", grid), std::invalid_argument);
    GridSpec neg;
    neg.a_values = {1.0};
    neg.b_values = {-1.0};
    CHECK_THROWS_AS(classify_family("quadric2", neg), std::invalid_argument);
}
