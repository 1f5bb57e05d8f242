#pragma once
#include <cmath>
#include <functional>
#include <memory>
#include <utility>

#include "vertexlab/errors.hpp"
#include "vertexlab/geometry.hpp"

namespace vertexlab {

// Surface of revolution X(t,theta) = (r(t) cos(theta), r(t) sin(theta), h(t))
// over t in [t_min, t_max], r > 0. Two construction styles cover everything in
// use: normalized (h(t) = t) and arclength (r'^2 + h'^2 = 1, with h', h''
// supplied as closures). Only h', h'' enter curvature formulas, so h itself is
// never stored.
class RevolutionSurface {
  public:
    using Fn = std::function<double(double)>;

    struct Profile {
        Fn f, d1, d2;
    };

    RevolutionSurface(Profile r, Fn dh, Fn ddh, double t_min, double t_max,
                      bool normalized, bool clamped = false)
        : r_(std::move(r)),
          dh_(std::move(dh)),
          ddh_(std::move(ddh)),
          t_min_(t_min),
          t_max_(t_max),
          normalized_(normalized),
          clamped_(clamped) {
        if (!(t_min_ < t_max_)) throw ParameterError("empty profile interval");
        if (radius(t_min_) <= 0 || radius(0.5 * (t_min_ + t_max_)) <= 0 || radius(t_max_) <= 0)
            throw ParameterError("profile radius must be positive on the interval");
    }

    // h(t) = t.
    static RevolutionSurface normalized(Profile r, double t_min, double t_max) {
        return RevolutionSurface(std::move(r), [](double) { return 1.0; },
                                 [](double) { return 0.0; }, t_min, t_max, true);
    }

    // r'^2 + h'^2 = 1; requires |r'| < 1 on the interval.
    static RevolutionSurface arclength(Profile r, double t_min, double t_max,
                                       bool clamped = false) {
        Profile rc = r;
        auto dh = [rc](double t) { return std::sqrt(1.0 - rc.d1(t) * rc.d1(t)); };
        auto ddh = [rc, dh](double t) { return -rc.d1(t) * rc.d2(t) / dh(t); };
        return RevolutionSurface(std::move(r), dh, ddh, t_min, t_max, false, clamped);
    }

    double t_min() const { return t_min_; }
    double t_max() const { return t_max_; }
    bool is_normalized() const { return normalized_; }
    bool interval_clamped() const { return clamped_; }

    bool contains(double t) const { return t >= t_min_ && t <= t_max_; }
    void require_inside(double t) const {
        if (!contains(t)) throw DomainError("parameter outside the profile interval");
    }

    double radius(double t) const { return r_.f(t); }
    double radius_d(double t) const { return r_.d1(t); }
    double radius_dd(double t) const { return r_.d2(t); }
    double height_d(double t) const { return dh_(t); }
    double height_dd(double t) const { return ddh_(t); }

    bool has_neck_at(double t, double tol = 1e-9) const {
        return std::abs(radius_d(t)) < tol;
    }

    // First fundamental form coefficients of the (t,theta) parametrization.
    double metric_E(double t) const {
        const double rd = radius_d(t), hd = height_d(t);
        return rd * rd + hd * hd;
    }
    double metric_G(double t) const {
        const double r = radius(t);
        return r * r;
    }
    double metric_E_d(double t) const {
        return 2.0 * (radius_d(t) * radius_dd(t) + height_d(t) * height_dd(t));
    }
    double metric_G_d(double t) const { return 2.0 * radius(t) * radius_d(t); }

    // K = h'(h'' r' - r'' h') / (r (r'^2 + h'^2)^2); reduces to -r''/r for
    // arclength profiles and to -r''/(r (1+r'^2)^2) for normalized ones.
    double gauss_curvature(double t) const {
        require_inside(t);
        const double r = radius(t), rd = radius_d(t), rdd = radius_dd(t);
        const double hd = height_d(t), hdd = height_dd(t);
        const double e = rd * rd + hd * hd;
        return hd * (hdd * rd - rdd * hd) / (r * e * e);
    }

    // Norm of the intrinsic gradient of K, |dK| = |K'(t)|/sqrt(E).
    double curvature_gradient_norm(double t, double h = 1e-5) const {
        const double kd = (gauss_curvature(t + h) - gauss_curvature(t - h)) / (2 * h);
        return std::abs(kd) / std::sqrt(metric_E(t));
    }

    Vec3 embed(double t, double theta) const {
        // z offset is arbitrary for curvature work; normalized surfaces use t.
        return {radius(t) * std::cos(theta), radius(t) * std::sin(theta),
                normalized_ ? t : 0.0};
    }

    // Outward-pointing unit normal n = X_t x X_theta / |X_t x X_theta|.
    Vec3 unit_normal(double t, double theta) const {
        const double rd = radius_d(t), hd = height_d(t);
        const double m = std::sqrt(rd * rd + hd * hd);
        return {-hd * std::cos(theta) / m, -hd * std::sin(theta) / m, rd / m};
    }

    // Geodesic curvature of the path alpha -> X(t(alpha), theta(alpha)) from
    // order-2 jets of the path: k = <c'', nu>/|c'|^2 with nu = n x T. The
    // embedded second fundamental data enters only through r, h derivatives.
    double path_geodesic_curvature(const Jet& t_jet, const Jet& theta_jet) const {
        require_inside(t_jet.f);
        Vec3 cp, cpp;
        path_derivatives(t_jet, theta_jet, cp, cpp);
        const double speed2 = dot(cp, cp);
        if (speed2 < 1e-16) throw RegularityError("surface path is singular");
        const Vec3 n = unit_normal(t_jet.f, theta_jet.f);
        const Vec3 nu = cross(n, (1.0 / std::sqrt(speed2)) * cp);
        return dot(cpp, nu) / speed2;
    }

    // |c'(alpha)|, the metric speed of the path (the embedding is isometric).
    double path_speed(const Jet& t_jet, const Jet& theta_jet) const {
        Vec3 cp, cpp;
        path_derivatives(t_jet, theta_jet, cp, cpp);
        return norm(cp);
    }

    // d/d lambda at 0 of the neck-perturbation curvature divided by cos(theta):
    // C = (1 + r(0) r''(0)) / r(0)^2, assuming a neck at t = 0 (so h'(0) = 1
    // in both profile styles).
    double neck_limit_constant() const {
        if (!has_neck_at(0.0, 1e-8)) throw ParameterError("profile has no neck at t = 0");
        const double r0 = radius(0.0);
        return (1.0 + r0 * radius_dd(0.0)) / (r0 * r0);
    }

  private:
    void path_derivatives(const Jet& t_jet, const Jet& theta_jet, Vec3& cp, Vec3& cpp) const {
        const double t0 = t_jet.f;
        // Order-2 jets of r(t(alpha)) and h(t(alpha)) along the path.
        const double r0 = radius(t0), rd = radius_d(t0), rdd = radius_dd(t0);
        const Jet R{r0, rd * t_jet.d1, rdd * t_jet.d1 * t_jet.d1 + rd * t_jet.d2, 0};
        const double hd = height_d(t0), hdd = height_dd(t0);
        const Jet H{0, hd * t_jet.d1, hdd * t_jet.d1 * t_jet.d1 + hd * t_jet.d2, 0};
        const Jet cx = R * cos(theta_jet);
        const Jet cy = R * sin(theta_jet);
        cp = {cx.d1, cy.d1, H.d1};
        cpp = {cx.d2, cy.d2, H.d2};
    }

    Profile r_;
    Fn dh_, ddh_;
    double t_min_, t_max_;
    bool normalized_;
    bool clamped_;
};

// The closed-form geodesic curvature of the neck perturbation
// c_lambda(theta) = X(lambda cos theta, theta) on a normalized surface, with
// rb = r(lambda cos theta) etc. Must agree with path_geodesic_curvature.
inline double neck_curvature_closed_form(const RevolutionSurface& surface, double lambda,
                                         double theta) {
    if (!surface.is_normalized())
        throw ParameterError("closed-form neck curvature requires the normalized profile form");
    const double u = lambda * std::cos(theta);
    surface.require_inside(u);
    const double rb = surface.radius(u), rb1 = surface.radius_d(u), rb2 = surface.radius_dd(u);
    const double s2 = std::sin(theta) * std::sin(theta);
    const double c = std::cos(theta);
    const double w = rb1 * rb1 + 1.0;
    const double num = rb1 * rb * rb + lambda * rb * (-lambda * rb1 * rb2 * s2 + c * w) +
                       2.0 * lambda * lambda * s2 * rb1 * w;
    const double den = std::sqrt(w) * std::pow(rb * rb + lambda * lambda * s2 * w, 1.5);
    return num / den;
}

using RevolutionSurfacePtr = std::shared_ptr<const RevolutionSurface>;

}  // namespace vertexlab
