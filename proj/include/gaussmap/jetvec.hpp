#pragma once

#include <Eigen/Dense>
#include <array>

#include "gaussmap/jet.hpp"

namespace gaussmap {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// An R^3-valued quantity carried componentwise as jets.
using Vec3J = std::array<Jet3, 3>;

inline Jet3 dot(const Vec3J& a, const Vec3J& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Vec3J cross(const Vec3J& a, const Vec3J& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

inline Vec3J operator*(const Vec3J& a, const Jet3& s) {
    return {a[0] * s, a[1] * s, a[2] * s};
}

inline Vec3J operator/(const Vec3J& a, const Jet3& s) {
    const Jet3 inv = Jet3::reciprocal(s);
    return a * inv;
}

inline Vec3 values(const Vec3J& a) {
    return Vec3(a[0].value(), a[1].value(), a[2].value());
}

inline Vec3J shift_du(const Vec3J& a) {
    return {shift_du(a[0]), shift_du(a[1]), shift_du(a[2])};
}

inline Vec3J shift_dv(const Vec3J& a) {
    return {shift_dv(a[0]), shift_dv(a[1]), shift_dv(a[2])};
}

}  // namespace gaussmap
