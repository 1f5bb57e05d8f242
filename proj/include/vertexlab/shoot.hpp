#pragma once
#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <vector>

#include "vertexlab/chart.hpp"
#include "vertexlab/curvature.hpp"
#include "vertexlab/curve.hpp"
#include "vertexlab/errors.hpp"
#include "vertexlab/fourier.hpp"
#include "vertexlab/revolution.hpp"

namespace vertexlab {

namespace detail {

using State4 = std::array<double, 4>;  // (q1, q2, dq1/ds, dq2/ds)

inline State4 axpy(const State4& y, double h, const State4& k) {
    return {y[0] + h * k[0], y[1] + h * k[1], y[2] + h * k[2], y[3] + h * k[3]};
}

// Dormand-Prince 5(4) pair with PI-free standard step control. Steps whose
// endpoint leaves the domain are rejected and halved; the last in-domain
// arclength is reported when the step floor is reached.
template <typename Rhs, typename InDomain>
State4 integrate_dp54(State4 y, double s_end, const Rhs& rhs, const InDomain& in_domain,
                      double tol) {
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                            e4 = 125.0 / 192 - 393.0 / 640,
                            e5 = -2187.0 / 6784 + 92097.0 / 339200, e6 = 11.0 / 84 - 187.0 / 2100,
                            e7 = -1.0 / 40;

    double s = 0.0;
    double h = std::min(0.05, s_end > 0 ? s_end : 0.05);
    const double h_min = 1e-14 * std::max(1.0, s_end);
    while (s < s_end) {
        h = std::min(h, s_end - s);
        const State4 k1 = rhs(y);
        const State4 k2 = rhs(axpy(y, h * a21, k1));
        State4 t;
        for (int i = 0; i < 4; ++i) t[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        const State4 k3 = rhs(t);
        for (int i = 0; i < 4; ++i) t[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        const State4 k4 = rhs(t);
        for (int i = 0; i < 4; ++i)
            t[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        const State4 k5 = rhs(t);
        for (int i = 0; i < 4; ++i)
            t[i] = y[i] +
                   h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        const State4 k6 = rhs(t);
        State4 y_new;
        for (int i = 0; i < 4; ++i)
            y_new[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        const State4 k7 = rhs(y_new);

        double err = 0.0;
        for (int i = 0; i < 4; ++i) {
            const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                   e6 * k6[i] + e7 * k7[i]);
            const double sc = tol * (1.0 + std::max(std::abs(y[i]), std::abs(y_new[i])));
            err = std::max(err, std::abs(ei) / sc);
        }

        const bool inside = in_domain(y_new);
        if (err <= 1.0 && inside) {
            s += h;
            y = y_new;
            h *= std::clamp(0.9 * std::pow(err > 1e-12 ? err : 1e-12, -0.2), 1.0, 5.0);
        } else {
            h *= inside ? std::clamp(0.9 * std::pow(err, -0.2), 0.2, 0.9) : 0.5;
            if (h < h_min)
                throw EscapeError("geodesic left the chart domain", s);
        }
    }
    return y;
}

}  // namespace detail

namespace detail {

inline State4 shoot_conformal_state(const ConformalChart& chart, Vec2 p, Vec2 v, double s,
                                    double tol) {
    const auto rhs = [&chart](const State4& y) -> State4 {
        const Vec2 g = chart.grad_log_factor({y[0], y[1]});
        const double vx = y[2], vy = y[3];
        return {vx, vy, -g.x * (vx * vx - vy * vy) - 2.0 * g.y * vx * vy,
                -g.y * (vy * vy - vx * vx) - 2.0 * g.x * vx * vy};
    };
    const auto inside = [&chart](const State4& y) { return chart.contains({y[0], y[1]}); };
    return integrate_dp54({p.x, p.y, v.x, v.y}, s, rhs, inside, tol);
}

}  // namespace detail

// Geodesic shooting in a conformal chart. v is the initial direction, unit in
// the metric (|v|_metric = factor * |v|_euclid = 1 within tolerance).
inline Vec2 geodesic_shoot(const ConformalChart& chart, Vec2 p, Vec2 v, double s,
                           double tol = 1e-9) {
    chart.require_inside(p);
    if (s < 0) throw ParameterError("negative shooting length");
    const double speed = chart.factor(p) * norm(v);
    if (std::abs(speed - 1.0) > 1e-6)
        throw ParameterError("initial direction is not metric-unit");
    if (s == 0) return p;
    const detail::State4 out = detail::shoot_conformal_state(chart, p, v, s, tol);
    return {out[0], out[1]};
}

// Geodesic shooting on a revolution surface from (t, theta) in the direction
// making metric angle alpha with the profile direction e_t.
inline Vec2 geodesic_shoot(const RevolutionSurface& surface, Vec2 p, double alpha, double s,
                           double tol = 1e-9) {
    surface.require_inside(p.x);
    if (s < 0) throw ParameterError("negative shooting length");
    if (s == 0) return p;
    const auto rhs = [&surface](const detail::State4& y) -> detail::State4 {
        const double e = surface.metric_E(y[0]), g = surface.metric_G(y[0]);
        const double ed = surface.metric_E_d(y[0]), gd = surface.metric_G_d(y[0]);
        const double vt = y[2], vth = y[3];
        return {vt, vth, (-0.5 * ed * vt * vt + 0.5 * gd * vth * vth) / e, -gd / g * vt * vth};
    };
    const auto inside = [&surface](const detail::State4& y) { return surface.contains(y[0]); };
    const double vt = std::cos(alpha) / std::sqrt(surface.metric_E(p.x));
    const double vth = std::sin(alpha) / std::sqrt(surface.metric_G(p.x));
    const detail::State4 out = detail::integrate_dp54({p.x, p.y, vt, vth}, s, rhs, inside, tol);
    return {out[0], out[1]};
}

// Residual of unit-speed preservation at the end of a shot; integration
// quality check.
inline double shoot_speed_drift(const ConformalChart& chart, Vec2 p, Vec2 v, double s,
                                double tol = 1e-9) {
    chart.require_inside(p);
    const detail::State4 out = detail::shoot_conformal_state(chart, p, v, s, tol);
    return std::abs(chart.factor({out[0], out[1]}) * std::hypot(out[2], out[3]) - 1.0);
}

namespace detail {

// 0.25 x estimated focal distance; the chart/surface variants differ only in
// how the curvature bound is sampled.
inline void check_circle_radius(double radius, double k_max, int n) {
    if (n < 64) throw ParameterError("metric circle needs at least 64 directions");
    if (!(radius > 0)) throw ParameterError("metric circle radius must be positive");
    if (k_max > 0) {
        const double guard = 0.25 * std::numbers::pi / std::sqrt(k_max);
        if (radius > guard)
            throw ParameterError("metric circle radius exceeds the injectivity guard");
    }
}

inline ClosedCurve circle_from_samples(std::vector<double> xs, std::vector<double> ys,
                                       Ambient ambient, double noise_cutoff) {
    const auto sx = std::make_shared<TrigSeries>(TrigSeries::fit(xs, 2 * std::numbers::pi, noise_cutoff));
    const auto sy = std::make_shared<TrigSeries>(TrigSeries::fit(ys, 2 * std::numbers::pi, noise_cutoff));
    auto eval = [sx, sy](double t) -> Jet2 { return {sx->eval(t), sy->eval(t)}; };
    return ClosedCurve(2 * std::numbers::pi, eval, std::move(ambient), true, false);
}

}  // namespace detail

// Metric circle of the given radius about a chart point: endpoints of n
// equispaced geodesic shots, smoothly interpolated. Parametrized by the
// shooting angle over [0, 2 pi).
inline ClosedCurve metric_circle(const ConformalChart& chart, Vec2 center, double radius, int n,
                                 double tol = 1e-10) {
    detail::check_circle_radius(radius, chart.nominal_curvature(), n);
    std::vector<double> xs(n), ys(n);
    const double inv_factor = 1.0 / chart.factor(center);
    for (int i = 0; i < n; ++i) {
        const double alpha = 2.0 * std::numbers::pi * i / n;
        const Vec2 v{std::cos(alpha) * inv_factor, std::sin(alpha) * inv_factor};
        const Vec2 q = geodesic_shoot(chart, center, v, radius, tol);
        xs[i] = q.x;
        ys[i] = q.y;
    }
    return detail::circle_from_samples(std::move(xs), std::move(ys), chart, 1e-9);
}

inline ClosedCurve metric_circle(const RevolutionSurfacePtr& surface, Vec2 center, double radius,
                                 int n, double tol = 1e-12) {
    double k_max = 0;
    for (int i = 0; i <= 32; ++i) {
        const double t =
            surface->t_min() + (surface->t_max() - surface->t_min()) * i / 32.0;
        k_max = std::max(k_max, surface->gauss_curvature(t));
    }
    detail::check_circle_radius(radius, k_max, n);
    std::vector<double> ts(n), ths(n);
    for (int i = 0; i < n; ++i) {
        const double alpha = 2.0 * std::numbers::pi * i / n;
        const Vec2 q = geodesic_shoot(*surface, center, alpha, radius, tol);
        ts[i] = q.x;
        ths[i] = q.y;
    }
    return detail::circle_from_samples(std::move(ts), std::move(ths), surface, 1e-9);
}

}  // namespace vertexlab
