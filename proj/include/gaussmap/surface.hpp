#pragma once

#include <string>
#include <vector>

#include "gaussmap/jetvec.hpp"

namespace gaussmap {

enum class SurfaceKind {
    Quadric1,          // z^2 - a x^2 - b y^2 = c, graph chart z = sqrt(c+au^2+bv^2)
    Quadric2,          // z = (a/2) x^2 + (b/2) y^2
    Plane,
    CircularCylinder,  // radius
    Sphere,            // radius, longitude/latitude chart
    Torus,             // ring_radius, tube_radius
    Catenoid,          // scale (waist radius)
    Helicoid,          // pitch
    Graph,             // z = polynomial(u, v)
};

std::string kind_name(SurfaceKind k);

struct Domain {
    double u_min = -2.0, u_max = 2.0;
    double v_min = -2.0, v_max = 2.0;
    bool contains(double u, double v) const {
        return u >= u_min && u <= u_max && v >= v_min && v <= v_max;
    }
};

struct GraphTerm {
    int deg_u = 0, deg_v = 0;
    double coeff = 0.0;
};

/// An immutable named parametric patch (u,v) -> R^3. Construction goes
/// through the factories, which validate parameters and install the
/// default admissible domains (kept away from chart seams and metric
/// degeneracies so every sampled point is regular).
class SurfacePatch {
public:
    static SurfacePatch quadric1(double a, double b, double c);
    static SurfacePatch quadric2(double a, double b);
    static SurfacePatch plane();
    static SurfacePatch circular_cylinder(double radius);
    static SurfacePatch sphere(double radius);
    static SurfacePatch torus(double ring_radius, double tube_radius);
    static SurfacePatch catenoid(double scale);
    static SurfacePatch helicoid(double pitch);
    static SurfacePatch graph(std::vector<GraphTerm> terms);

    SurfaceKind kind() const { return kind_; }
    const Domain& domain() const { return domain_; }
    void set_domain(const Domain& d) { domain_ = d; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double radius() const { return radius_; }
    double ring_radius() const { return ring_radius_; }
    double tube_radius() const { return tube_radius_; }
    double scale() const { return scale_; }
    double pitch() const { return pitch_; }
    const std::vector<GraphTerm>& graph_terms() const { return graph_terms_; }

    /// Floor under the quadric1 radicand and scaled metric determinant.
    static constexpr double kRadicandFloor = 0.05;

    /// True when (u,v) lies in the domain rectangle and clear of the
    /// kind-specific degeneracies (quadric1 keeps c+au^2+bv^2 and the
    /// scaled metric determinant above kRadicandFloor).
    bool admissible(double u, double v) const;

    std::string describe() const;

private:
    SurfacePatch() = default;

    SurfaceKind kind_ = SurfaceKind::Plane;
    Domain domain_;
    std::string name_;
    double a_ = 0, b_ = 0, c_ = 0;
    double radius_ = 0, ring_radius_ = 0, tube_radius_ = 0;
    double scale_ = 0, pitch_ = 0;
    std::vector<GraphTerm> graph_terms_;
};

/// Position with all partials to total order 3. Throws std::domain_error
/// when (u,v) is not admissible.
Vec3J evaluate(const SurfacePatch& s, double u, double v);

/// First fundamental form carried as jets (order 2 retained) so the
/// Laplacian can differentiate through it.
struct MetricJets {
    Jet3 E, F, G;
    Jet3 detg;
    Jet3 inv_uu, inv_uv, inv_vv;
};

MetricJets metric(const SurfacePatch& s, double u, double v);

/// Unit normal n = (x_u x x_v)/sqrt(det g), partials to order 2.
Vec3J gauss_map(const SurfacePatch& s, double u, double v);

struct CurvatureData {
    double E = 0, F = 0, G = 0, detg = 0;
    double L = 0, M = 0, N = 0;
    double H = 0, K = 0;
    double kappa1 = 0, kappa2 = 0;
    Vec3 normal = Vec3::Zero();
};

CurvatureData curvatures(const SurfacePatch& s, double u, double v);

/// Everything the operators need at one point, computed once. Orders:
/// x carries 3, x_u/x_v/metric/n carry 2, second-form scalars and H, K
/// carry 1.
struct FrameJets {
    Vec3J x;
    Vec3J xu, xv;
    Jet3 E, F, G, detg, root_detg;
    Jet3 inv_uu, inv_uv, inv_vv;
    Vec3J n;
    Jet3 L, M, N;
    Jet3 H, K;
};

FrameJets frame(const SurfacePatch& s, double u, double v);

}  // namespace gaussmap
