#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace gaussmap {

/// Bivariate truncated Taylor value: a scalar together with all of its
/// partial derivatives up to total order 3 at an (implicit) base point.
///
/// Coefficients are stored as raw partials f_{ij} = d^{i+j} f / du^i dv^j,
/// NOT divided by factorials, so the product rule is the binomially
/// weighted Leibniz convolution and extraction of a partial is a plain
/// array read.
///
/// `ord` is the highest total order whose coefficients are valid. Fresh
/// seeds carry ord = 3; taking a derivative (shift_du/shift_dv) lowers it
/// by one, and binary operations propagate the minimum. Reading a slot
/// above `ord` is a programming error (asserted).
class Jet3 {
public:
    static constexpr int kSlots = 10;

    Jet3() = default;

    static Jet3 constant(double x) {
        Jet3 j;
        j.c_[0] = x;
        return j;
    }

    static Jet3 from_parts(const std::array<double, kSlots>& parts,
                           int ord = 3) {
        Jet3 j;
        j.c_ = parts;
        j.ord_ = ord;
        return j;
    }

    /// The two coordinate jets at (u0, v0): value u0 with du = 1, and
    /// value v0 with dv = 1.
    static std::pair<Jet3, Jet3> vars(double u0, double v0) {
        Jet3 ju, jv;
        ju.c_[slot(1, 0)] = 1.0;
        ju.c_[0] = u0;
        jv.c_[slot(0, 1)] = 1.0;
        jv.c_[0] = v0;
        return {ju, jv};
    }

    double value() const { return c_[0]; }
    double du() const { return part(1, 0); }
    double dv() const { return part(0, 1); }
    double duu() const { return part(2, 0); }
    double duv() const { return part(1, 1); }
    double dvv() const { return part(0, 2); }
    double duuu() const { return part(3, 0); }
    double duuv() const { return part(2, 1); }
    double duvv() const { return part(1, 2); }
    double dvvv() const { return part(0, 3); }

    double part(int i, int j) const {
        assert(i >= 0 && j >= 0 && i + j <= ord_);
        return c_[slot(i, j)];
    }

    int order() const { return ord_; }

    /// Jets below this magnitude are rejected as divisors. Guards true
    /// singularities only; domain checks elsewhere keep denominators sane.
    static inline double division_floor = 1e-300;

    Jet3 operator-() const {
        Jet3 r = *this;
        for (double& x : r.c_) x = -x;
        return r;
    }

    Jet3 operator+(const Jet3& o) const {
        Jet3 r;
        r.ord_ = std::min(ord_, o.ord_);
        for (int s = 0; s < kSlots; ++s) r.c_[s] = c_[s] + o.c_[s];
        return r;
    }

    Jet3 operator-(const Jet3& o) const {
        Jet3 r;
        r.ord_ = std::min(ord_, o.ord_);
        for (int s = 0; s < kSlots; ++s) r.c_[s] = c_[s] - o.c_[s];
        return r;
    }

    /// Order-3 truncated Leibniz product:
    /// (fg)_{ij} = sum_{k<=i, l<=j} C(i,k) C(j,l) f_{kl} g_{i-k,j-l}.
    Jet3 operator*(const Jet3& o) const {
        Jet3 r;
        r.ord_ = std::min(ord_, o.ord_);
        for (int i = 0; i <= 3; ++i) {
            for (int j = 0; i + j <= 3; ++j) {
                if (i + j > r.ord_) continue;
                double acc = 0.0;
                for (int k = 0; k <= i; ++k)
                    for (int l = 0; l <= j; ++l)
                        acc += kBinom[i][k] * kBinom[j][l] * c_[slot(k, l)] *
                               o.c_[slot(i - k, j - l)];
                r.c_[slot(i, j)] = acc;
            }
        }
        return r;
    }

    Jet3 operator/(const Jet3& o) const { return *this * reciprocal(o); }

    Jet3 operator+(double s) const {
        Jet3 r = *this;
        r.c_[0] += s;
        return r;
    }
    Jet3 operator-(double s) const { return *this + (-s); }
    Jet3 operator*(double s) const {
        Jet3 r = *this;
        for (double& x : r.c_) x *= s;
        return r;
    }
    Jet3 operator/(double s) const { return *this * (1.0 / s); }

    friend Jet3 operator+(double s, const Jet3& j) { return j + s; }
    friend Jet3 operator-(double s, const Jet3& j) { return (-j) + s; }
    friend Jet3 operator*(double s, const Jet3& j) { return j * s; }
    friend Jet3 operator/(double s, const Jet3& j) {
        return reciprocal(j) * s;
    }

    /// Chain rule to order 3 for h = phi(f), given phi and its first three
    /// derivatives evaluated at f's value.
    static Jet3 compose(const Jet3& f, double p0, double p1, double p2,
                        double p3) {
        Jet3 h;
        h.ord_ = f.ord_;
        const double fu = f.c_[slot(1, 0)], fv = f.c_[slot(0, 1)];
        const double fuu = f.c_[slot(2, 0)], fuv = f.c_[slot(1, 1)],
                     fvv = f.c_[slot(0, 2)];
        h.c_[0] = p0;
        if (h.ord_ >= 1) {
            h.c_[slot(1, 0)] = p1 * fu;
            h.c_[slot(0, 1)] = p1 * fv;
        }
        if (h.ord_ >= 2) {
            h.c_[slot(2, 0)] = p2 * fu * fu + p1 * fuu;
            h.c_[slot(1, 1)] = p2 * fu * fv + p1 * fuv;
            h.c_[slot(0, 2)] = p2 * fv * fv + p1 * fvv;
        }
        if (h.ord_ >= 3) {
            h.c_[slot(3, 0)] =
                p3 * fu * fu * fu + 3.0 * p2 * fu * fuu + p1 * f.c_[slot(3, 0)];
            h.c_[slot(2, 1)] = p3 * fu * fu * fv +
                               p2 * (2.0 * fu * fuv + fuu * fv) +
                               p1 * f.c_[slot(2, 1)];
            h.c_[slot(1, 2)] = p3 * fu * fv * fv +
                               p2 * (2.0 * fv * fuv + fu * fvv) +
                               p1 * f.c_[slot(1, 2)];
            h.c_[slot(0, 3)] =
                p3 * fv * fv * fv + 3.0 * p2 * fv * fvv + p1 * f.c_[slot(0, 3)];
        }
        return h;
    }

    static Jet3 reciprocal(const Jet3& f) {
        const double x = f.value();
        if (std::abs(x) < division_floor)
            throw std::domain_error("jet: division by near-zero value");
        const double ix = 1.0 / x;
        return compose(f, ix, -ix * ix, 2.0 * ix * ix * ix,
                       -6.0 * ix * ix * ix * ix);
    }

    static constexpr int slot(int i, int j) {
        // (0,0) (1,0) (0,1) (2,0) (1,1) (0,2) (3,0) (2,1) (1,2) (0,3)
        constexpr int base[4] = {0, 1, 3, 6};
        return base[i + j] + j;
    }

private:
    static constexpr double kBinom[4][4] = {
        {1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};

    std::array<double, kSlots> c_{};
    int ord_ = 3;

    friend Jet3 shift_du(const Jet3&);
    friend Jet3 shift_dv(const Jet3&);
};

/// The jet of df/du, valid to one order less than the input.
inline Jet3 shift_du(const Jet3& f) {
    assert(f.ord_ >= 1);
    Jet3 r;
    r.ord_ = f.ord_ - 1;
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; i + j <= 2; ++j)
            if (i + j <= r.ord_)
                r.c_[Jet3::slot(i, j)] = f.c_[Jet3::slot(i + 1, j)];
    return r;
}

inline Jet3 shift_dv(const Jet3& f) {
    assert(f.ord_ >= 1);
    Jet3 r;
    r.ord_ = f.ord_ - 1;
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; i + j <= 2; ++j)
            if (i + j <= r.ord_)
                r.c_[Jet3::slot(i, j)] = f.c_[Jet3::slot(i, j + 1)];
    return r;
}

inline Jet3 sqrt(const Jet3& f) {
    const double x = f.value();
    if (!(x > 0.0)) throw std::domain_error("jet: sqrt of non-positive value");
    const double s = std::sqrt(x);
    return Jet3::compose(f, s, 0.5 / s, -0.25 / (s * x),
                         0.375 / (s * x * x));
}

inline Jet3 sin(const Jet3& f) {
    const double s = std::sin(f.value()), c = std::cos(f.value());
    return Jet3::compose(f, s, c, -s, -c);
}

inline Jet3 cos(const Jet3& f) {
    const double s = std::sin(f.value()), c = std::cos(f.value());
    return Jet3::compose(f, c, -s, -c, s);
}

inline Jet3 exp(const Jet3& f) {
    const double e = std::exp(f.value());
    return Jet3::compose(f, e, e, e, e);
}

inline Jet3 cosh(const Jet3& f) {
    return (exp(f) + exp(-f)) * 0.5;
}

inline Jet3 sinh(const Jet3& f) {
    return (exp(f) - exp(-f)) * 0.5;
}

/// f^n for integer n; negative n goes through the guarded reciprocal.
inline Jet3 pow_int(const Jet3& f, int n) {
    if (n < 0) return Jet3::reciprocal(pow_int(f, -n));
    Jet3 acc = Jet3::constant(1.0);
    Jet3 base = f;
    for (unsigned e = static_cast<unsigned>(n); e != 0; e >>= 1) {
        if (e & 1u) acc = acc * base;
        if (e > 1u) base = base * base;
    }
    return acc;
}

}  // namespace gaussmap
