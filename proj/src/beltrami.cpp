#include "gaussmap/beltrami.hpp"

#include <stdexcept>

namespace gaussmap {

ScalarField position_component(int i) {
    return [i](const SurfacePatch& s, double u, double v) {
        return evaluate(s, u, v)[static_cast<size_t>(i)];
    };
}

ScalarField gauss_component(int i) {
    return [i](const SurfacePatch& s, double u, double v) {
        return frame(s, u, v).n[static_cast<size_t>(i)];
    };
}

ScalarField mean_curvature_field() {
    return [](const SurfacePatch& s, double u, double v) {
        return frame(s, u, v).H;
    };
}

ScalarField constant_field(double value) {
    return [value](const SurfacePatch&, double, double) {
        return Jet3::constant(value);
    };
}

double laplace_from_frame(const FrameJets& fr, const Jet3& f) {
    if (f.order() < 2)
        throw std::invalid_argument("laplace: field must carry order >= 2");
    const Jet3 fu = shift_du(f);
    const Jet3 fv = shift_dv(f);
    const Jet3 flux_u = fr.root_detg * (fr.inv_uu * fu + fr.inv_uv * fv);
    const Jet3 flux_v = fr.root_detg * (fr.inv_uv * fu + fr.inv_vv * fv);
    return -(shift_du(flux_u).value() + shift_dv(flux_v).value()) /
           fr.root_detg.value();
}

double laplace_scalar(const SurfacePatch& s, const ScalarField& f, double u,
                      double v) {
    return laplace_from_frame(frame(s, u, v), f(s, u, v));
}

double laplacian_quadric1_closed(double a, double b, double c, const Jet3& f,
                                 double u, double v) {
    if (f.order() < 2)
        throw std::invalid_argument("laplace: field must carry order >= 2");
    const double w = c + a * u * u + b * v * v;
    const double det_scaled = c + a * (a + 1.0) * u * u + b * (b + 1.0) * v * v;
    if (!(det_scaled > 1e-12) || !(w > 0.0))
        throw std::domain_error("quadric1 operator: point outside chart");
    const double drift = a * c + b * c + a * b * (a + 1.0) * u * u +
                         a * b * (b + 1.0) * v * v;
    const double second =
        (w + b * b * v * v) * f.duu() - 2.0 * a * b * u * v * f.duv() +
        (w + a * a * u * u) * f.dvv();
    const double first = a * u * f.du() + b * v * f.dv();
    return -second / det_scaled + drift * first / (det_scaled * det_scaled);
}

double closed_form_q1(const SurfacePatch& s, const ScalarField& f, double u,
                      double v) {
    if (s.kind() != SurfaceKind::Quadric1)
        throw std::invalid_argument("closed_form_q1 expects a quadric1 patch");
    return laplacian_quadric1_closed(s.a(), s.b(), s.c(), f(s, u, v), u, v);
}

double laplacian_sphere_reduced(double c, const Jet3& f, double u, double v) {
    if (f.order() < 2)
        throw std::invalid_argument("laplace: field must carry order >= 2");
    return ((u * u - c) * f.duu() + 2.0 * u * v * f.duv() +
            (v * v - c) * f.dvv() + 2.0 * u * f.du() + 2.0 * v * f.dv()) /
           c;
}

double laplacian_quadric2_closed(double a, double b, const Jet3& f, double u,
                                 double v) {
    if (f.order() < 2)
        throw std::invalid_argument("laplace: field must carry order >= 2");
    const double X = 1.0 + a * a * u * u;
    const double Y = 1.0 + b * b * v * v;
    const double g = 1.0 + a * a * u * u + b * b * v * v;
    const double second =
        Y * f.duu() + X * f.dvv() - 2.0 * a * b * u * v * f.duv();
    const double first = a * u * f.du() + b * v * f.dv();
    return -second / g + (a * Y + b * X) * first / (g * g);
}

double closed_form_q2(const SurfacePatch& s, const ScalarField& f, double u,
                      double v) {
    if (s.kind() != SurfaceKind::Quadric2)
        throw std::invalid_argument("closed_form_q2 expects a quadric2 patch");
    return laplacian_quadric2_closed(s.a(), s.b(), f(s, u, v), u, v);
}

namespace {

Vec3 grad_from_frame(const FrameJets& fr, const Jet3& f) {
    if (f.order() < 1)
        throw std::invalid_argument("grad: field must carry order >= 1");
    const double fu = f.du(), fv = f.dv();
    const double alpha = fr.inv_uu.value() * fu + fr.inv_uv.value() * fv;
    const double beta = fr.inv_uv.value() * fu + fr.inv_vv.value() * fv;
    return alpha * values(fr.xu) + beta * values(fr.xv);
}

}  // namespace

Vec3 grad_surface(const SurfacePatch& s, const ScalarField& f, double u,
                  double v) {
    return grad_from_frame(frame(s, u, v), f(s, u, v));
}

IdentityResiduals identity_residuals(const SurfacePatch& s, double u,
                                     double v) {
    const FrameJets fr = frame(s, u, v);
    Vec3 lap_x, lap_n;
    for (int i = 0; i < 3; ++i) {
        lap_x[i] = laplace_from_frame(fr, fr.x[static_cast<size_t>(i)]);
        lap_n[i] = laplace_from_frame(fr, fr.n[static_cast<size_t>(i)]);
    }
    const double H = fr.H.value();
    const double K = fr.K.value();
    const Vec3 n = values(fr.n);
    const Vec3 grad_2h = grad_from_frame(fr, fr.H * 2.0);

    IdentityResiduals r;
    r.res_x = (lap_x + 2.0 * H * n).norm();
    r.res_n = (lap_n - grad_2h - (4.0 * H * H - 2.0 * K) * n).norm();
    r.scale_x = 1.0 + lap_x.norm();
    r.scale_n = 1.0 + lap_n.norm();
    return r;
}

}  // namespace gaussmap
