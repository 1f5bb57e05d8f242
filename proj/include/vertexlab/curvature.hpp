#pragma once
#include <cmath>
#include <functional>

#include "vertexlab/curve.hpp"

namespace vertexlab {

namespace detail {
constexpr double kSpeedFloor = 1e-8;
}

// Signed Euclidean curvature w.r.t. the +90-degree rotated tangent.
inline double euclidean_curvature(const Jet2& j) {
    const Vec2 d1 = j.d1(), d2 = j.d2();
    const double v = norm(d1);
    if (v < detail::kSpeedFloor) throw RegularityError("curve speed below regularity floor");
    return (d1.x * d2.y - d1.y * d2.x) / (v * v * v);
}

// d(kappa_euclid)/dt from order-3 jets.
inline double euclidean_curvature_rate(const Jet2& j) {
    const Vec2 d1 = j.d1(), d2 = j.d2(), d3 = j.d3();
    const double v2 = norm2(d1);
    const double v = std::sqrt(v2);
    if (v < detail::kSpeedFloor) throw RegularityError("curve speed below regularity floor");
    const double num = d1.x * d2.y - d1.y * d2.x;
    const double num_d = d1.x * d3.y - d1.y * d3.x;
    return num_d / (v * v2) - 3.0 * num * dot(d1, d2) / (v * v2 * v2);
}

// Geodesic curvature in a conformal chart:
//   kappa_g = (kappa_e - d_n log(factor)) / factor,
// n the unit Euclidean left normal. Zero for geodesics, +1 for horocycles
// traversed left-to-right in the half-plane.
inline double conformal_geodesic_curvature(const ConformalChart& chart, const Jet2& j) {
    const Vec2 p = j.p();
    chart.require_inside(p);
    const Vec2 d1 = j.d1();
    const double v = norm(d1);
    if (v < detail::kSpeedFloor) throw RegularityError("curve speed below regularity floor");
    const Vec2 n = (1.0 / v) * perp(d1);
    const double dn_log = dot(n, chart.grad_log_factor(p));
    return (euclidean_curvature(j) - dn_log) / chart.factor(p);
}

// Exact d(kappa_g)/dt via the chain rule; needs order-3 jets and the chart's
// log-factor Hessian.
inline double conformal_geodesic_curvature_rate(const ConformalChart& chart, const Jet2& j) {
    const Vec2 p = j.p();
    chart.require_inside(p);
    const Vec2 d1 = j.d1(), d2 = j.d2();
    const double v2 = norm2(d1);
    const double v = std::sqrt(v2);
    if (v < detail::kSpeedFloor) throw RegularityError("curve speed below regularity floor");

    const Vec2 g = chart.grad_log_factor(p);
    const auto hess = chart.hess_log_factor(p);
    const Vec2 hg{hess[0] * d1.x + hess[1] * d1.y, hess[1] * d1.x + hess[2] * d1.y};

    const Vec2 n = (1.0 / v) * perp(d1);
    const Vec2 n_d = (1.0 / v) * perp(d2) - (dot(d1, d2) / (v * v2)) * perp(d1);

    const double kappa_e = euclidean_curvature(j);
    const double kappa_e_d = euclidean_curvature_rate(j);
    const double w = kappa_e - dot(n, g);
    const double w_d = kappa_e_d - dot(n_d, g) - dot(n, hg);
    const double logf_d = dot(g, d1);  // d/dt of log(factor) along the curve
    return (w_d - w * logf_d) / chart.factor(p);
}

// --- curve-level dispatch over the ambient ---------------------------------

// Metric speed ds/dt at parameter t.
inline double metric_speed(const ClosedCurve& curve, double t) {
    const Jet2 j = curve.jet(t);
    if (const auto* s = ambient_surface(curve.ambient())) return (*s)->path_speed(j.x, j.y);
    const ConformalChart* chart = ambient_chart(curve.ambient());
    return chart->factor(j.p()) * norm(j.d1());
}

// Geodesic curvature of the curve at parameter t in its ambient metric.
inline double geodesic_curvature(const ClosedCurve& curve, double t) {
    const Jet2 j = curve.jet(t);
    if (const auto* s = ambient_surface(curve.ambient()))
        return (*s)->path_geodesic_curvature(j.x, j.y);
    return conformal_geodesic_curvature(*ambient_chart(curve.ambient()), j);
}

// Spec-named wrappers.
inline double conformal_geodesic_curvature(const ConformalChart& chart, const ClosedCurve& curve,
                                           double t) {
    return conformal_geodesic_curvature(chart, curve.jet(t));
}
inline double revolution_geodesic_curvature(const RevolutionSurface& surface,
                                            const ClosedCurve& path, double theta) {
    const Jet2 j = path.jet(theta);
    return surface.path_geodesic_curvature(j.x, j.y);
}

inline std::function<double(double)> kappa_evaluator(const ClosedCurve& curve) {
    return [curve](double t) { return geodesic_curvature(curve, t); };
}

// d(kappa)/ds evaluator. Analytic chain for conformal ambients of analytic
// curves; otherwise a 5-point stencil on kappa with step period/grid_n,
// converted by the metric speed.
inline std::function<double(double)> kappa_rate_evaluator(const ClosedCurve& curve,
                                                          int grid_n = 0) {
    const bool analytic_chain =
        curve.analytic() && ambient_chart(curve.ambient()) != nullptr;
    if (analytic_chain) {
        const ConformalChart chart = *ambient_chart(curve.ambient());
        return [curve, chart](double t) {
            const Jet2 j = curve.jet(t);
            const double dk_dt = conformal_geodesic_curvature_rate(chart, j);
            return dk_dt / (chart.factor(j.p()) * norm(j.d1()));
        };
    }
    if (grid_n <= 0) grid_n = default_grid_samples();
    const double h = curve.period() / grid_n;
    return [curve, h](double t) {
        const auto k = [&](double u) { return geodesic_curvature(curve, u); };
        const double dk_dt =
            (8.0 * (k(t + h) - k(t - h)) - (k(t + 2 * h) - k(t - 2 * h))) / (12.0 * h);
        return dk_dt / metric_speed(curve, t);
    };
}

}  // namespace vertexlab
