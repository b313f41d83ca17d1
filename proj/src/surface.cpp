#include "gaussmap/surface.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gaussmap {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSeamMargin = 0.1;
constexpr double kDetFloor = 1e-12;

}  // namespace

std::string kind_name(SurfaceKind k) {
    switch (k) {
        case SurfaceKind::Quadric1: return "quadric1";
        case SurfaceKind::Quadric2: return "quadric2";
        case SurfaceKind::Plane: return "plane";
        case SurfaceKind::CircularCylinder: return "circular_cylinder";
        case SurfaceKind::Sphere: return "sphere";
        case SurfaceKind::Torus: return "torus";
        case SurfaceKind::Catenoid: return "catenoid";
        case SurfaceKind::Helicoid: return "helicoid";
        case SurfaceKind::Graph: return "graph";
    }
    return "unknown";
}

SurfacePatch SurfacePatch::quadric1(double a, double b, double c) {
    if (a == 0.0 || b == 0.0)
        throw std::invalid_argument("quadric1 requires a*b != 0");
    if (!(c > 0.0)) throw std::invalid_argument("quadric1 requires c > 0");
    SurfacePatch s;
    s.kind_ = SurfaceKind::Quadric1;
    s.a_ = a;
    s.b_ = b;
    s.c_ = c;
    s.domain_ = {-2.0, 2.0, -2.0, 2.0};
    s.name_ = "quadric1";
    return s;
}

SurfacePatch SurfacePatch::quadric2(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("quadric2 requires a, b > 0");
    SurfacePatch s;
    s.kind_ = SurfaceKind::Quadric2;
    s.a_ = a;
    s.b_ = b;
    s.domain_ = {-2.0, 2.0, -2.0, 2.0};
    s.name_ = "quadric2";
    return s;
}

SurfacePatch SurfacePatch::plane() {
    SurfacePatch s;
    s.kind_ = SurfaceKind::Plane;
    s.domain_ = {-2.0, 2.0, -2.0, 2.0};
    s.name_ = "plane";
    return s;
}

SurfacePatch SurfacePatch::circular_cylinder(double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("cylinder radius > 0");
    SurfacePatch s;
    s.kind_ = SurfaceKind::CircularCylinder;
    s.radius_ = radius;
    s.domain_ = {kSeamMargin, 2.0 * kPi - kSeamMargin, -2.0, 2.0};
    s.name_ = "circular_cylinder";
    return s;
}

SurfacePatch SurfacePatch::sphere(double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("sphere radius > 0");
    SurfacePatch s;
    s.kind_ = SurfaceKind::Sphere;
    s.radius_ = radius;
    s.domain_ = {kSeamMargin, 2.0 * kPi - kSeamMargin,
                 -0.5 * kPi + kSeamMargin, 0.5 * kPi - kSeamMargin};
    s.name_ = "sphere";
    return s;
}

SurfacePatch SurfacePatch::torus(double ring_radius, double tube_radius) {
    if (!(ring_radius > tube_radius) || !(tube_radius > 0.0))
        throw std::invalid_argument("torus requires ring > tube > 0");
    SurfacePatch s;
    s.kind_ = SurfaceKind::Torus;
    s.ring_radius_ = ring_radius;
    s.tube_radius_ = tube_radius;
    s.domain_ = {kSeamMargin, 2.0 * kPi - kSeamMargin, kSeamMargin,
                 2.0 * kPi - kSeamMargin};
    s.name_ = "torus";
    return s;
}

SurfacePatch SurfacePatch::catenoid(double scale) {
    if (!(scale > 0.0)) throw std::invalid_argument("catenoid scale > 0");
    SurfacePatch s;
    s.kind_ = SurfaceKind::Catenoid;
    s.scale_ = scale;
    s.domain_ = {kSeamMargin, 2.0 * kPi - kSeamMargin, -1.5, 1.5};
    s.name_ = "catenoid";
    return s;
}

SurfacePatch SurfacePatch::helicoid(double pitch) {
    if (pitch == 0.0) throw std::invalid_argument("helicoid pitch != 0");
    SurfacePatch s;
    s.kind_ = SurfaceKind::Helicoid;
    s.pitch_ = pitch;
    s.domain_ = {kSeamMargin, 2.0 * kPi - kSeamMargin, -2.0, 2.0};
    s.name_ = "helicoid";
    return s;
}

SurfacePatch SurfacePatch::graph(std::vector<GraphTerm> terms) {
    for (const auto& t : terms)
        if (t.deg_u < 0 || t.deg_v < 0)
            throw std::invalid_argument("graph term degrees must be >= 0");
    SurfacePatch s;
    s.kind_ = SurfaceKind::Graph;
    s.graph_terms_ = std::move(terms);
    s.domain_ = {-2.0, 2.0, -2.0, 2.0};
    s.name_ = "graph";
    return s;
}

bool SurfacePatch::admissible(double u, double v) const {
    if (!domain_.contains(u, v)) return false;
    if (kind_ == SurfaceKind::Quadric1) {
        const double w = c_ + a_ * u * u + b_ * v * v;
        const double det_scaled =
            c_ + a_ * (a_ + 1.0) * u * u + b_ * (b_ + 1.0) * v * v;
        return w >= kRadicandFloor && det_scaled >= kRadicandFloor;
    }
    return true;
}

std::string SurfacePatch::describe() const {
    std::ostringstream os;
    os << kind_name(kind_);
    switch (kind_) {
        case SurfaceKind::Quadric1:
            os << "(a=" << a_ << ", b=" << b_ << ", c=" << c_ << ")";
            break;
        case SurfaceKind::Quadric2:
            os << "(a=" << a_ << ", b=" << b_ << ")";
            break;
        case SurfaceKind::CircularCylinder:
        case SurfaceKind::Sphere:
            os << "(r=" << radius_ << ")";
            break;
        case SurfaceKind::Torus:
            os << "(R=" << ring_radius_ << ", r=" << tube_radius_ << ")";
            break;
        case SurfaceKind::Catenoid:
            os << "(scale=" << scale_ << ")";
            break;
        case SurfaceKind::Helicoid:
            os << "(pitch=" << pitch_ << ")";
            break;
        default:
            break;
    }
    return os.str();
}

Vec3J evaluate(const SurfacePatch& s, double u, double v) {
    if (!s.admissible(u, v))
        throw std::domain_error("surface: point (u,v) outside admissible domain of " +
                                s.describe());
    auto [ju, jv] = Jet3::vars(u, v);
    switch (s.kind()) {
        case SurfaceKind::Quadric1: {
            const Jet3 w = Jet3::constant(s.c()) + ju * ju * s.a() + jv * jv * s.b();
            return {ju, jv, sqrt(w)};
        }
        case SurfaceKind::Quadric2: {
            return {ju, jv, ju * ju * (0.5 * s.a()) + jv * jv * (0.5 * s.b())};
        }
        case SurfaceKind::Plane:
            return {ju, jv, Jet3::constant(0.0)};
        case SurfaceKind::CircularCylinder:
            return {cos(ju) * s.radius(), sin(ju) * s.radius(), jv};
        case SurfaceKind::Sphere: {
            const Jet3 cv = cos(jv);
            return {cos(ju) * cv * s.radius(), sin(ju) * cv * s.radius(),
                    sin(jv) * s.radius()};
        }
        case SurfaceKind::Torus: {
            const Jet3 ring = Jet3::constant(s.ring_radius()) +
                              cos(jv) * s.tube_radius();
            return {cos(ju) * ring, sin(ju) * ring, sin(jv) * s.tube_radius()};
        }
        case SurfaceKind::Catenoid: {
            const Jet3 r = cosh(jv / s.scale()) * s.scale();
            return {cos(ju) * r, sin(ju) * r, jv};
        }
        case SurfaceKind::Helicoid:
            return {cos(ju) * jv, sin(ju) * jv, ju * s.pitch()};
        case SurfaceKind::Graph: {
            Jet3 z = Jet3::constant(0.0);
            for (const auto& t : s.graph_terms())
                z = z + pow_int(ju, t.deg_u) * pow_int(jv, t.deg_v) * t.coeff;
            return {ju, jv, z};
        }
    }
    throw std::logic_error("surface: unhandled kind");
}

FrameJets frame(const SurfacePatch& s, double u, double v) {
    FrameJets fr;
    fr.x = evaluate(s, u, v);
    fr.xu = shift_du(fr.x);
    fr.xv = shift_dv(fr.x);
    fr.E = dot(fr.xu, fr.xu);
    fr.F = dot(fr.xu, fr.xv);
    fr.G = dot(fr.xv, fr.xv);
    fr.detg = fr.E * fr.G - fr.F * fr.F;
    if (!(fr.detg.value() > kDetFloor))
        throw std::domain_error("surface: degenerate metric at sample point on " +
                                s.describe());
    fr.root_detg = sqrt(fr.detg);
    const Jet3 inv_det = Jet3::reciprocal(fr.detg);
    fr.inv_uu = fr.G * inv_det;
    fr.inv_uv = -(fr.F * inv_det);
    fr.inv_vv = fr.E * inv_det;
    fr.n = cross(fr.xu, fr.xv) / fr.root_detg;
    const Vec3J xuu = shift_du(fr.xu);
    const Vec3J xuv = shift_dv(fr.xu);
    const Vec3J xvv = shift_dv(fr.xv);
    fr.L = dot(xuu, fr.n);
    fr.M = dot(xuv, fr.n);
    fr.N = dot(xvv, fr.n);
    // H = (EN - 2FM + GL)/(2 det g), K = (LN - M^2)/det g
    fr.H = (fr.E * fr.N - fr.F * fr.M * 2.0 + fr.G * fr.L) /
           (fr.detg * 2.0);
    fr.K = (fr.L * fr.N - fr.M * fr.M) / fr.detg;
    return fr;
}

MetricJets metric(const SurfacePatch& s, double u, double v) {
    const FrameJets fr = frame(s, u, v);
    return {fr.E, fr.F, fr.G, fr.detg, fr.inv_uu, fr.inv_uv, fr.inv_vv};
}

Vec3J gauss_map(const SurfacePatch& s, double u, double v) {
    return frame(s, u, v).n;
}

CurvatureData curvatures(const SurfacePatch& s, double u, double v) {
    const FrameJets fr = frame(s, u, v);
    CurvatureData cd;
    cd.E = fr.E.value();
    cd.F = fr.F.value();
    cd.G = fr.G.value();
    cd.detg = fr.detg.value();
    cd.L = fr.L.value();
    cd.M = fr.M.value();
    cd.N = fr.N.value();
    cd.H = fr.H.value();
    cd.K = fr.K.value();
    const double disc = std::max(cd.H * cd.H - cd.K, 0.0);
    cd.kappa1 = cd.H + std::sqrt(disc);
    cd.kappa2 = cd.H - std::sqrt(disc);
    cd.normal = values(fr.n);
    return cd;
}

}  // namespace gaussmap
