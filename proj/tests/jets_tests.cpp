#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>

#include "gaussmap/jet.hpp"
#include "support.hpp"

using gaussmap::Jet3;
using namespace testsupport;

namespace {

// A random smooth expression evaluable both on doubles and on jets, so
// the same tree feeds the implementation and the finite-difference
// oracle. Division and sqrt are fenced to keep everything globally smooth.
struct Expr {
    enum Op { Const, U, V, Add, Sub, Mul, SafeDiv, SafeSqrt, Sin, Cos } op;
    double k = 0.0;
    std::unique_ptr<Expr> a, b;

    template <typename T>
    T eval(const T& u, const T& v) const {
        using std::cos;
        using std::sin;
        using std::sqrt;
        switch (op) {
            case Const: return T(u * 0.0) + k;
            case U: return u;
            case V: return v;
            case Add: return a->eval(u, v) + b->eval(u, v);
            case Sub: return a->eval(u, v) - b->eval(u, v);
            case Mul: return a->eval(u, v) * b->eval(u, v);
            case SafeDiv: {
                auto d = b->eval(u, v);
                return a->eval(u, v) / (d * d + 2.5);
            }
            case SafeSqrt: {
                auto x = a->eval(u, v);
                return sqrt(x * x + 1.5);
            }
            case Sin: return sin(a->eval(u, v));
            case Cos: return cos(a->eval(u, v));
        }
        return T(u * 0.0);
    }
};

std::unique_ptr<Expr> random_expr(Rng& rng, int depth) {
    auto e = std::make_unique<Expr>();
    const int pick = depth <= 0 ? rng.uniform_int(0, 2) : rng.uniform_int(0, 9);
    e->op = static_cast<Expr::Op>(pick);
    switch (e->op) {
        case Expr::Const: e->k = rng.unif(-2.0, 2.0); break;
        case Expr::U:
        case Expr::V: break;
        case Expr::Add:
        case Expr::Sub:
        case Expr::Mul:
        case Expr::SafeDiv:
            e->a = random_expr(rng, depth - 1);
            e->b = random_expr(rng, depth - 1);
            break;
        case Expr::SafeSqrt:
        case Expr::Sin:
        case Expr::Cos: e->a = random_expr(rng, depth - 1); break;
    }
    return e;
}

Jet3 jet_of(const Expr& e, double u0, double v0) {
    auto [ju, jv] = Jet3::vars(u0, v0);
    return e.eval<Jet3>(ju, jv);
}

Fn2 fn_of(const Expr& e) {
    return [&e](double u, double v) { return e.eval<double>(u, v); };
}

Jet3 quadric1_radicand(double a, double b, double c, double u0, double v0) {
    auto [ju, jv] = Jet3::vars(u0, v0);
    return Jet3::constant(c) + ju * ju * a + jv * jv * b;
}

}  // namespace

TEST_CASE("variable seeding") {
    auto [ju, jv] = Jet3::vars(2.0, 3.0);
    CHECK(ju.value() == 2.0);
    CHECK(ju.du() == 1.0);
    CHECK(ju.dv() == 0.0);
    CHECK(ju.duu() == 0.0);
    CHECK(ju.duuu() == 0.0);
    CHECK(jv.value() == 3.0);
    CHECK(jv.dv() == 1.0);
    CHECK(jv.du() == 0.0);
}

TEST_CASE("square of the u variable") {
    auto [ju, jv] = Jet3::vars(2.0, 3.0);
    const Jet3 sq = ju * ju;
    CHECK(sq.value() == 4.0);
    CHECK(sq.du() == 4.0);
    CHECK(sq.duu() == 2.0);
    CHECK(sq.duuu() == 0.0);
    CHECK(sq.dv() == 0.0);
}

TEST_CASE("quadratic radicand jet at (1,1)") {
    // c + a u^2 + b v^2 with a=2, b=1, c=1
    const Jet3 w = quadric1_radicand(2, 1, 1, 1.0, 1.0);
    CHECK(w.value() == doctest::Approx(4.0));
    CHECK(w.du() == doctest::Approx(4.0));
    CHECK(w.dv() == doctest::Approx(2.0));
    CHECK(w.duu() == doctest::Approx(4.0));
    CHECK(w.dvv() == doctest::Approx(2.0));
    CHECK(w.duv() == doctest::Approx(0.0));
}

TEST_CASE("product rule on u*v") {
    auto [ju, jv] = Jet3::vars(2.0, 3.0);
    const Jet3 p = ju * jv;
    CHECK(p.value() == 6.0);
    CHECK(p.du() == 3.0);
    CHECK(p.dv() == 2.0);
    CHECK(p.duv() == 1.0);
    CHECK(p.duu() == 0.0);
    CHECK(p.dvv() == 0.0);
    CHECK(p.duuv() == 0.0);
}

TEST_CASE("f/f is the constant 1") {
    Rng rng(101);
    for (int t = 0; t < 20; ++t) {
        auto expr = random_expr(rng, 3);
        const Jet3 f = jet_of(*expr, rng.unif(-1, 1), rng.unif(-1, 1)) + 3.5;
        const Jet3 q = f / f;
        CHECK(q.value() == doctest::Approx(1.0).epsilon(1e-13));
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; i + j <= 3; ++j)
                if (i + j > 0) CHECK(std::abs(q.part(i, j)) < 1e-12);
    }
}

TEST_CASE("a*u/sqrt(w) against finite differences") {
    // a=2, b=1, c=1 at (0.7, -0.4); first partials within 1e-7 of the
    // h = 1e-5 central-difference oracle.
    const double a = 2, b = 1, c = 1, u0 = 0.7, v0 = -0.4;
    auto [ju, jv] = Jet3::vars(u0, v0);
    const Jet3 w = Jet3::constant(c) + ju * ju * a + jv * jv * b;
    const Jet3 f = (ju * a) / gaussmap::sqrt(w);
    Fn2 ref = [&](double u, double v) {
        return a * u / std::sqrt(c + a * u * u + b * v * v);
    };
    CHECK(std::abs(f.du() - fd_du(ref, u0, v0, 1e-5)) < 1e-7);
    CHECK(std::abs(f.dv() - fd_dv(ref, u0, v0, 1e-5)) < 1e-7);
}

TEST_CASE("sqrt of a constant jet") {
    const Jet3 nine = Jet3::constant(9.0);
    const Jet3 three = gaussmap::sqrt(nine);
    CHECK(three.value() == 3.0);
    CHECK(three.du() == 0.0);
    CHECK(three.duu() == 0.0);
}

TEST_CASE("sqrt of the radicand at (1,1)") {
    const Jet3 w = quadric1_radicand(2, 1, 1, 1.0, 1.0);
    const Jet3 r = gaussmap::sqrt(w);
    CHECK(r.value() == doctest::Approx(2.0));
    CHECK(r.du() == doctest::Approx(1.0));   // a u / sqrt(w) = 2/2
    CHECK(r.dv() == doctest::Approx(0.5));   // b v / sqrt(w) = 1/2
}

TEST_CASE("sin/cos jets on the cylinder chart vs finite differences") {
    const double r = 2.0;
    for (double u0 : {0.3, 1.2, 2.9}) {
        auto [ju, jv] = Jet3::vars(u0, 0.5);
        const Jet3 x = gaussmap::cos(ju) * r;
        const Jet3 y = gaussmap::sin(ju) * r;
        Fn2 fx = [&](double u, double) { return r * std::cos(u); };
        Fn2 fy = [&](double u, double) { return r * std::sin(u); };
        CHECK(std::abs(x.duu() - fd_duu(fx, u0, 0.5, 1e-4)) < 1e-7);
        CHECK(std::abs(y.duu() - fd_duu(fy, u0, 0.5, 1e-4)) < 1e-7);
        CHECK(std::abs(x.duv()) < 1e-15);
    }
}

TEST_CASE("division floor guards singular evaluation") {
    const Jet3 tiny = Jet3::constant(0.0);
    const Jet3 one = Jet3::constant(1.0);
    CHECK_THROWS_AS(one / tiny, std::domain_error);
}

TEST_CASE("sqrt domain error") {
    CHECK_THROWS_AS(gaussmap::sqrt(Jet3::constant(-1.0)), std::domain_error);
    CHECK_THROWS_AS(gaussmap::sqrt(Jet3::constant(0.0)), std::domain_error);
}

TEST_CASE("pow_int basics") {
    auto [ju, jv] = Jet3::vars(1.5, 0.0);
    const Jet3 cube = gaussmap::pow_int(ju, 3);
    CHECK(cube.value() == doctest::Approx(3.375));
    CHECK(cube.du() == doctest::Approx(3 * 1.5 * 1.5));
    CHECK(cube.duuu() == doctest::Approx(6.0));
    const Jet3 zero_pow = gaussmap::pow_int(Jet3::constant(0.0), 2);
    CHECK(zero_pow.value() == 0.0);

    const Jet3 f = ju + 2.0;
    const Jet3 inv_sq = gaussmap::pow_int(f, -2);
    const Jet3 ref = Jet3::constant(1.0) / (f * f);
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j)
            CHECK(inv_sq.part(i, j) == doctest::Approx(ref.part(i, j)).epsilon(1e-13));
}

TEST_CASE("exp jet vs finite differences") {
    auto [ju, jv] = Jet3::vars(0.4, -0.2);
    const Jet3 f = gaussmap::exp(ju * jv);
    Fn2 ref = [](double u, double v) { return std::exp(u * v); };
    CHECK(std::abs(f.du() - fd_du(ref, 0.4, -0.2, 1e-5)) < 1e-8);
    CHECK(std::abs(f.duv() - fd_duv(ref, 0.4, -0.2, 1e-4)) < 1e-6);
}

TEST_CASE("polynomial jets reproduce analytic partials exactly") {
    Rng rng(2024);
    auto falling = [](int n, int k) {
        double r = 1;
        for (int i = 0; i < k; ++i) r *= (n - i);
        return r;
    };
    for (int trial = 0; trial < 50; ++trial) {
        double coef[4][4] = {};
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; i + j <= 3; ++j) coef[i][j] = rng.unif(-2, 2);
        const double u0 = rng.unif(-1.5, 1.5), v0 = rng.unif(-1.5, 1.5);
        auto [ju, jv] = Jet3::vars(u0, v0);
        Jet3 p = Jet3::constant(0.0);
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; i + j <= 3; ++j)
                p = p + gaussmap::pow_int(ju, i) * gaussmap::pow_int(jv, j) *
                            coef[i][j];
        for (int k = 0; k <= 3; ++k) {
            for (int l = 0; k + l <= 3; ++l) {
                double want = 0;
                for (int i = k; i <= 3; ++i)
                    for (int j = l; i + j <= 3; ++j)
                        want += coef[i][j] * falling(i, k) * falling(j, l) *
                                std::pow(u0, i - k) * std::pow(v0, j - l);
                CHECK(rel_err(p.part(k, l), want) < 1e-12);
            }
        }
    }
}

TEST_CASE("random composed expressions vs finite differences") {
    Rng rng(777);
    int done = 0;
    while (done < 100) {
        auto expr = random_expr(rng, 4);
        const double u0 = rng.unif(-1.2, 1.2), v0 = rng.unif(-1.2, 1.2);
        const Jet3 j = jet_of(*expr, u0, v0);
        Fn2 f = fn_of(*expr);
        const double h = 1e-5, h3 = 1e-3;
        CHECK(rel_err(j.du(), fd_du(f, u0, v0, h)) < 1e-6);
        CHECK(rel_err(j.dv(), fd_dv(f, u0, v0, h)) < 1e-6);
        CHECK(rel_err(j.duu(), fd_duu(f, u0, v0, 1e-4)) < 1e-6);
        CHECK(rel_err(j.duv(), fd_duv(f, u0, v0, 1e-4)) < 1e-6);
        CHECK(rel_err(j.dvv(), fd_dvv(f, u0, v0, 1e-4)) < 1e-6);
        CHECK(rel_err(j.duuu(), fd_duuu(f, u0, v0, h3)) < 1e-4);
        CHECK(rel_err(j.duuv(), fd_duuv(f, u0, v0, h3)) < 1e-4);
        CHECK(rel_err(j.duvv(), fd_duvv(f, u0, v0, h3)) < 1e-4);
        CHECK(rel_err(j.dvvv(), fd_dvvv(f, u0, v0, h3)) < 1e-4);
        ++done;
    }
}

TEST_CASE("commutativity and distributivity on random jets") {
    Rng rng(99);
    for (int t = 0; t < 50; ++t) {
        std::array<double, 10> pa, pb, pc;
        for (auto* arr : {&pa, &pb, &pc})
            for (double& x : *arr) x = rng.unif(-2, 2);
        const Jet3 a = Jet3::from_parts(pa);
        const Jet3 b = Jet3::from_parts(pb);
        const Jet3 c = Jet3::from_parts(pc);
        const Jet3 ab = a * b, ba = b * a;
        const Jet3 lhs = a * (b + c);
        const Jet3 rhs = a * b + a * c;
        for (int i = 0; i <= 3; ++i) {
            for (int j = 0; i + j <= 3; ++j) {
                CHECK(rel_err(ab.part(i, j), ba.part(i, j)) < 1e-13);
                CHECK(rel_err(lhs.part(i, j), rhs.part(i, j)) < 1e-13);
            }
        }
    }
}
