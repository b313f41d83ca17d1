#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "gaussmap/surface.hpp"
#include "support.hpp"

using namespace gaussmap;
using testsupport::Rng;

namespace {

std::pair<double, double> sample_admissible(Rng& rng, const SurfacePatch& s) {
    const Domain& d = s.domain();
    for (int tries = 0; tries < 10000; ++tries) {
        const double u = rng.unif(d.u_min, d.u_max);
        const double v = rng.unif(d.v_min, d.v_max);
        if (s.admissible(u, v)) return {u, v};
    }
    FAIL("could not sample an admissible point on " << s.describe());
    return {0, 0};
}

std::vector<SurfacePatch> zoo() {
    return {SurfacePatch::plane(),
            SurfacePatch::circular_cylinder(2.0),
            SurfacePatch::sphere(2.0),
            SurfacePatch::torus(2.0, 0.5),
            SurfacePatch::catenoid(1.0),
            SurfacePatch::helicoid(1.0),
            SurfacePatch::quadric1(2.0, 1.0, 1.0),
            SurfacePatch::quadric2(1.0, 1.0)};
}

}  // namespace

TEST_CASE("quadric1 sphere chart at the north pole") {
    const auto s = SurfacePatch::quadric1(-1, -1, 1);
    const Vec3J x = evaluate(s, 0.0, 0.0);
    CHECK(values(x).isApprox(Vec3(0, 0, 1), 1e-15));
    CHECK(x[0].du() == 1.0);
    CHECK(x[1].du() == 0.0);
    CHECK(x[2].du() == doctest::Approx(0.0));
}

TEST_CASE("quadric2 paraboloid vertex") {
    const auto s = SurfacePatch::quadric2(1, 1);
    const Vec3J x = evaluate(s, 0.0, 0.0);
    CHECK(values(x).norm() == doctest::Approx(0.0));
    CHECK(x[2].duu() == doctest::Approx(1.0));  // z = u^2/2
    CHECK(x[0].duu() == 0.0);
}

TEST_CASE("quadric1 height is the square root of the radicand") {
    const auto s = SurfacePatch::quadric1(2, 1, 1);
    const Vec3J x = evaluate(s, 0.5, 0.5);
    CHECK(x[2].value() == doctest::Approx(std::sqrt(1.75)));
}

TEST_CASE("quadric1 metric components at (1,1)") {
    // E = 1 + (au)^2/w, F = ab uv / w, G = 1 + (bv)^2/w, a=2 b=1 c=1
    const auto s = SurfacePatch::quadric1(2, 1, 1);
    const MetricJets m = metric(s, 1.0, 1.0);
    CHECK(m.E.value() == doctest::Approx(2.0));
    CHECK(m.F.value() == doctest::Approx(0.5));
    CHECK(m.G.value() == doctest::Approx(1.25));
}

TEST_CASE("quadric2 metric and determinant at (1,2)") {
    const auto s = SurfacePatch::quadric2(1, 1);
    const MetricJets m = metric(s, 1.0, 2.0);
    CHECK(m.E.value() == doctest::Approx(2.0));
    CHECK(m.F.value() == doctest::Approx(2.0));
    CHECK(m.G.value() == doctest::Approx(5.0));
    CHECK(m.detg.value() == doctest::Approx(6.0));
    // det g = 1 + a^2 u^2 + b^2 v^2
    CHECK(m.detg.value() == doctest::Approx(1.0 + 1.0 + 4.0));
}

TEST_CASE("plane metric is the identity") {
    const auto s = SurfacePatch::plane();
    Rng rng(5);
    for (int t = 0; t < 10; ++t) {
        auto [u, v] = sample_admissible(rng, s);
        const MetricJets m = metric(s, u, v);
        CHECK(m.E.value() == doctest::Approx(1.0));
        CHECK(m.F.value() == doctest::Approx(0.0));
        CHECK(m.G.value() == doctest::Approx(1.0));
    }
}

TEST_CASE("gauss map of the quadric1 sphere is radial") {
    const auto s = SurfacePatch::quadric1(-1, -1, 4.0);  // radius 2
    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        auto [u, v] = sample_admissible(rng, s);
        const Vec3 x = values(evaluate(s, u, v));
        const Vec3 n = values(gauss_map(s, u, v));
        CHECK((n - x / 2.0).norm() < 1e-12);
    }
}

TEST_CASE("gauss map of quadric2 at the vertex") {
    const auto s = SurfacePatch::quadric2(1, 1);
    const Vec3 n = values(gauss_map(s, 0.0, 0.0));
    CHECK(n.isApprox(Vec3(0, 0, 1), 1e-14));
}

TEST_CASE("gauss map of quadric1(2,1,1) at (1,1)") {
    // w = 4, scaled det = 9: n = (-au, -bv, sqrt(w))/sqrt(scaled det)
    const auto s = SurfacePatch::quadric1(2, 1, 1);
    const Vec3 n = values(gauss_map(s, 1.0, 1.0));
    CHECK(n[0] == doctest::Approx(-2.0 / 3.0));
    CHECK(n[1] == doctest::Approx(-1.0 / 3.0));
    CHECK(n[2] == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("component formulas agree with the generic cross product") {
    // For both quadric kinds the closed-form normal components must match
    // the cross-product construction to near machine precision.
    Rng rng(11);
    const auto q1 = SurfacePatch::quadric1(2, 1, 1);
    for (int t = 0; t < 50; ++t) {
        auto [u, v] = sample_admissible(rng, q1);
        const double w = 1 + 2 * u * u + v * v;
        const double ds = 1 + 6 * u * u + 2 * v * v;
        const Vec3 closed(-2 * u / std::sqrt(ds), -v / std::sqrt(ds),
                          std::sqrt(w) / std::sqrt(ds));
        CHECK((values(gauss_map(q1, u, v)) - closed).norm() < 1e-12);
    }
    const auto q2 = SurfacePatch::quadric2(1.5, 0.5);
    for (int t = 0; t < 50; ++t) {
        auto [u, v] = sample_admissible(rng, q2);
        const double g = 1 + 2.25 * u * u + 0.25 * v * v;
        const Vec3 closed(-1.5 * u / std::sqrt(g), -0.5 * v / std::sqrt(g),
                          1.0 / std::sqrt(g));
        CHECK((values(gauss_map(q2, u, v)) - closed).norm() < 1e-12);
    }
}

TEST_CASE("sphere curvatures") {
    Rng rng(13);
    for (const auto& s :
         {SurfacePatch::sphere(2.0), SurfacePatch::quadric1(-1, -1, 4.0)}) {
        for (int t = 0; t < 20; ++t) {
            auto [u, v] = sample_admissible(rng, s);
            const CurvatureData cd = curvatures(s, u, v);
            CHECK(cd.K == doctest::Approx(0.25).epsilon(1e-10));
            CHECK(std::abs(cd.H) == doctest::Approx(0.5).epsilon(1e-10));
        }
    }
}

TEST_CASE("plane curvatures vanish") {
    const CurvatureData cd = curvatures(SurfacePatch::plane(), 0.3, -1.2);
    CHECK(cd.H == doctest::Approx(0.0));
    CHECK(cd.K == doctest::Approx(0.0));
}

TEST_CASE("catenoid is minimal with negative curvature") {
    const auto s = SurfacePatch::catenoid(1.0);
    Rng rng(17);
    for (int t = 0; t < 20; ++t) {
        auto [u, v] = sample_admissible(rng, s);
        const CurvatureData cd = curvatures(s, u, v);
        CHECK(std::abs(cd.H) < 1e-10);
        CHECK(cd.K < 0.0);
    }
}

TEST_CASE("quadric1 scaled determinant identity") {
    // det g * w = c + a(a+1) u^2 + b(b+1) v^2
    Rng rng(19);
    for (auto [a, b, c] : {std::tuple{2.0, 1.0, 1.0}, {-1.0, -2.0, 1.0},
                           {0.5, -0.5, 2.0}}) {
        const auto s = SurfacePatch::quadric1(a, b, c);
        for (int t = 0; t < 100; ++t) {
            auto [u, v] = sample_admissible(rng, s);
            const MetricJets m = metric(s, u, v);
            const double w = c + a * u * u + b * v * v;
            const double want = c + a * (a + 1) * u * u + b * (b + 1) * v * v;
            CHECK(testsupport::rel_err(m.detg.value() * w, want) < 1e-12);
        }
    }
}

TEST_CASE("quadric2 determinant identity") {
    Rng rng(23);
    const double a = 1.5, b = 0.75;
    const auto s = SurfacePatch::quadric2(a, b);
    for (int t = 0; t < 100; ++t) {
        auto [u, v] = sample_admissible(rng, s);
        const MetricJets m = metric(s, u, v);
        const double want = 1 + a * a * u * u + b * b * v * v;
        CHECK(testsupport::rel_err(m.detg.value(), want) < 1e-12);
    }
}

TEST_CASE("normal is unit and orthogonal to the tangent frame") {
    Rng rng(29);
    for (const auto& s : zoo()) {
        for (int t = 0; t < 30; ++t) {
            auto [u, v] = sample_admissible(rng, s);
            const FrameJets fr = frame(s, u, v);
            const Vec3 n = values(fr.n);
            CHECK(std::abs(n.norm() - 1.0) < 1e-12);
            CHECK(std::abs(n.dot(values(fr.xu))) < 1e-12 * values(fr.xu).norm());
            CHECK(std::abs(n.dot(values(fr.xv))) < 1e-12 * values(fr.xv).norm());
        }
    }
}

TEST_CASE("principal curvatures recombine to H and K") {
    Rng rng(31);
    for (const auto& s : zoo()) {
        for (int t = 0; t < 100; ++t) {
            auto [u, v] = sample_admissible(rng, s);
            const CurvatureData cd = curvatures(s, u, v);
            CHECK(testsupport::rel_err(cd.kappa1 * cd.kappa2, cd.K) < 1e-10);
            CHECK(testsupport::rel_err(cd.kappa1 + cd.kappa2, 2 * cd.H) < 1e-10);
        }
    }
}

TEST_CASE("out-of-domain evaluation is rejected") {
    const auto s = SurfacePatch::quadric1(-1, -1, 1);
    CHECK_THROWS_AS(evaluate(s, 1.5, 1.5), std::domain_error);  // radicand < 0
    CHECK_THROWS_AS(evaluate(s, 3.0, 0.0), std::domain_error);  // outside rect
    CHECK(s.admissible(0.9, 0.0));
    CHECK_FALSE(s.admissible(0.99, 0.0));  // radicand below floor
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(SurfacePatch::quadric1(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(SurfacePatch::quadric1(1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(SurfacePatch::quadric1(1, 1, -2), std::invalid_argument);
    CHECK_THROWS_AS(SurfacePatch::quadric2(-1, 1), std::invalid_argument);
    CHECK_THROWS_AS(SurfacePatch::quadric2(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(SurfacePatch::torus(0.5, 2.0), std::invalid_argument);
}

TEST_CASE("graph surface matches quadric2 when given the same polynomial") {
    const auto g = SurfacePatch::graph({{2, 0, 0.5}, {0, 2, 0.5}});
    const auto q = SurfacePatch::quadric2(1, 1);
    Rng rng(37);
    for (int t = 0; t < 20; ++t) {
        auto [u, v] = sample_admissible(rng, q);
        CHECK((values(evaluate(g, u, v)) - values(evaluate(q, u, v))).norm() <
              1e-14);
        const CurvatureData a = curvatures(g, u, v);
        const CurvatureData b = curvatures(q, u, v);
        CHECK(a.H == doctest::Approx(b.H).epsilon(1e-12));
        CHECK(a.K == doctest::Approx(b.K).epsilon(1e-12));
    }
}
