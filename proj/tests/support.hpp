#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>

namespace testsupport {

// Central finite differences, the independent oracle the jet coefficients
// are checked against. Third-order stencils take a wider step: with
// h = 1e-5 the 1/h^3 rounding term would swamp the answer; h = 1e-3 keeps
// truncation ~h^2 and rounding ~1e-7.
using Fn2 = std::function<double(double, double)>;

inline double fd_du(const Fn2& f, double u, double v, double h) {
    return (f(u + h, v) - f(u - h, v)) / (2 * h);
}
inline double fd_dv(const Fn2& f, double u, double v, double h) {
    return (f(u, v + h) - f(u, v - h)) / (2 * h);
}
inline double fd_duu(const Fn2& f, double u, double v, double h) {
    return (f(u + h, v) - 2 * f(u, v) + f(u - h, v)) / (h * h);
}
inline double fd_dvv(const Fn2& f, double u, double v, double h) {
    return (f(u, v + h) - 2 * f(u, v) + f(u, v - h)) / (h * h);
}
inline double fd_duv(const Fn2& f, double u, double v, double h) {
    return (f(u + h, v + h) - f(u + h, v - h) - f(u - h, v + h) +
            f(u - h, v - h)) /
           (4 * h * h);
}
inline double fd_duuu(const Fn2& f, double u, double v, double h) {
    return (f(u + 2 * h, v) - 2 * f(u + h, v) + 2 * f(u - h, v) -
            f(u - 2 * h, v)) /
           (2 * h * h * h);
}
inline double fd_dvvv(const Fn2& f, double u, double v, double h) {
    return (f(u, v + 2 * h) - 2 * f(u, v + h) + 2 * f(u, v - h) -
            f(u, v - 2 * h)) /
           (2 * h * h * h);
}
inline double fd_duuv(const Fn2& f, double u, double v, double h) {
    auto duu_at = [&](double vv) {
        return (f(u + h, vv) - 2 * f(u, vv) + f(u - h, vv)) / (h * h);
    };
    return (duu_at(v + h) - duu_at(v - h)) / (2 * h);
}
inline double fd_duvv(const Fn2& f, double u, double v, double h) {
    auto dvv_at = [&](double uu) {
        return (f(uu, v + h) - 2 * f(uu, v) + f(uu, v - h)) / (h * h);
    };
    return (dvv_at(u + h) - dvv_at(u - h)) / (2 * h);
}

inline double rel_err(double got, double want) {
    return std::abs(got - want) / (1.0 + std::max(std::abs(got), std::abs(want)));
}

// Deterministic uniform doubles; std:: distributions are not portable
// across library implementations, the raw engine is.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(uint64_t seed) : gen(seed) {}
    double unif(double lo, double hi) {
        const double x = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * x;
    }
    int uniform_int(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(gen() % static_cast<uint64_t>(hi - lo + 1));
    }
};

}  // namespace testsupport
