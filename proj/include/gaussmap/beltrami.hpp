#pragma once

#include <functional>

#include "gaussmap/surface.hpp"

namespace gaussmap {

/// A scalar observable on a surface, evaluated as a jet. Fields handed to
/// the Laplacian must carry order >= 2; the surface gradient needs only
/// order >= 1.
using ScalarField = std::function<Jet3(const SurfacePatch&, double, double)>;

ScalarField position_component(int i);
ScalarField gauss_component(int i);
ScalarField mean_curvature_field();
ScalarField constant_field(double value);

/// Beltrami's second differential parameter with the sign convention of
/// the classification: Delta f = -(1/W) [ d_u(W (g^uu f_u + g^uv f_v))
/// + d_v(W (g^uv f_u + g^vv f_v)) ], W = sqrt(det g). On the unit sphere
/// each coordinate is an eigenfunction with eigenvalue +2.
double laplace_scalar(const SurfacePatch& s, const ScalarField& f, double u,
                      double v);

/// Same operator evaluated from a precomputed frame and field jet; the
/// building block shared by the identity checks.
double laplace_from_frame(const FrameJets& fr, const Jet3& f);

/// Closed-form kind-I operator: for z^2 - a x^2 - b y^2 = c with
/// w = c + a u^2 + b v^2, P = c + a(a+1)u^2 + b(b+1)v^2 and drift
/// numerator Q = ac + bc + ab(a+1)u^2 + ab(b+1)v^2,
///   Delta f = -[(w + b^2 v^2) f_uu - 2ab uv f_uv + (w + a^2 u^2) f_vv]/P
///             + Q (a u f_u + b v f_v)/P^2.
double laplacian_quadric1_closed(double a, double b, double c, const Jet3& f,
                                 double u, double v);
double closed_form_q1(const SurfacePatch& s, const ScalarField& f, double u,
                      double v);

/// The kind-I operator specialized to a = b = -1 (the sphere fiber):
///   Delta f = [(u^2-c) f_uu + 2uv f_uv + (v^2-c) f_vv + 2u f_u + 2v f_v]/c.
double laplacian_sphere_reduced(double c, const Jet3& f, double u, double v);

/// Closed-form kind-II operator: for z = (a/2)x^2 + (b/2)y^2 with
/// X = 1 + a^2 u^2, Y = 1 + b^2 v^2, g = 1 + a^2 u^2 + b^2 v^2,
///   Delta f = -[Y f_uu + X f_vv - 2ab uv f_uv]/g
///             + (aY + bX)(a u f_u + b v f_v)/g^2.
double laplacian_quadric2_closed(double a, double b, const Jet3& f, double u,
                                 double v);
double closed_form_q2(const SurfacePatch& s, const ScalarField& f, double u,
                      double v);

/// Surface gradient in ambient coordinates:
/// grad f = (g^uu f_u + g^uv f_v) x_u + (g^uv f_u + g^vv f_v) x_v.
Vec3 grad_surface(const SurfacePatch& s, const ScalarField& f, double u,
                  double v);

/// Residuals of the two structural identities at one point:
///   res_x = |Delta x + 2 H n|
///   res_n = |Delta n - grad(2H) - (4H^2 - 2K) n|
/// together with the scales 1 + |Delta x| and 1 + |Delta n| the
/// thresholds are quoted against.
struct IdentityResiduals {
    double res_x = 0, res_n = 0;
    double scale_x = 1, scale_n = 1;
};

IdentityResiduals identity_residuals(const SurfacePatch& s, double u, double v);

}  // namespace gaussmap
