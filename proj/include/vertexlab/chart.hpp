#pragma once
#include <array>
#include <cmath>
#include <string>

#include "vertexlab/errors.hpp"
#include "vertexlab/geometry.hpp"

namespace vertexlab {

enum class ChartKind { Euclidean, HalfPlane, SphereStereo };

inline const char* to_string(ChartKind k) {
    switch (k) {
        case ChartKind::Euclidean: return "euclidean";
        case ChartKind::HalfPlane: return "half-plane";
        case ChartKind::SphereStereo: return "sphere-stereo";
    }
    return "?";
}

// Planar chart carrying the conformal metric factor(x,y)^2 (dx^2 + dy^2).
//   Euclidean:    factor = 1            on R^2,        K = 0
//   HalfPlane:    factor = 1/y          on {y > 0},    K = -1
//   SphereStereo: factor = 2/(1+x^2+y^2) on R^2,       K = +1
// Sphere coordinates blow up at the projection pole; points beyond a large
// coordinate cutoff are treated as outside the chart.
class ConformalChart {
  public:
    explicit ConformalChart(ChartKind kind) : kind_(kind) {}

    ChartKind kind() const { return kind_; }

    static constexpr double kSphereCoordLimit = 1e8;

    bool contains(Vec2 p) const {
        switch (kind_) {
            case ChartKind::Euclidean: return true;
            case ChartKind::HalfPlane: return p.y > 0;
            case ChartKind::SphereStereo: return norm2(p) < kSphereCoordLimit * kSphereCoordLimit;
        }
        return false;
    }

    void require_inside(Vec2 p) const {
        if (!contains(p))
            throw DomainError(std::string("point outside ") + to_string(kind_) + " chart domain");
    }

    double factor(Vec2 p) const {
        switch (kind_) {
            case ChartKind::Euclidean: return 1.0;
            case ChartKind::HalfPlane: return 1.0 / p.y;
            case ChartKind::SphereStereo: return 2.0 / (1.0 + norm2(p));
        }
        return 1.0;
    }

    double log_factor(Vec2 p) const {
        switch (kind_) {
            case ChartKind::Euclidean: return 0.0;
            case ChartKind::HalfPlane: return -std::log(p.y);
            case ChartKind::SphereStereo: return std::log(2.0) - std::log1p(norm2(p));
        }
        return 0.0;
    }

    Vec2 grad_log_factor(Vec2 p) const {
        switch (kind_) {
            case ChartKind::Euclidean: return {0, 0};
            case ChartKind::HalfPlane: return {0, -1.0 / p.y};
            case ChartKind::SphereStereo: {
                const double w = 1.0 + norm2(p);
                return {-2.0 * p.x / w, -2.0 * p.y / w};
            }
        }
        return {0, 0};
    }

    // Hessian of log(factor) as {h_xx, h_xy, h_yy}.
    std::array<double, 3> hess_log_factor(Vec2 p) const {
        switch (kind_) {
            case ChartKind::Euclidean: return {0, 0, 0};
            case ChartKind::HalfPlane: return {0, 0, 1.0 / (p.y * p.y)};
            case ChartKind::SphereStereo: {
                const double w = 1.0 + norm2(p);
                const double a = -2.0 / w, b = 4.0 / (w * w);
                return {a + b * p.x * p.x, b * p.x * p.y, a + b * p.y * p.y};
            }
        }
        return {0, 0, 0};
    }

    double nominal_curvature() const {
        switch (kind_) {
            case ChartKind::Euclidean: return 0.0;
            case ChartKind::HalfPlane: return -1.0;
            case ChartKind::SphereStereo: return 1.0;
        }
        return 0.0;
    }

    // Gauss curvature K = -Laplacian(log factor)/factor^2 with a 5-point
    // stencil; an independent check of the nominal constant.
    double numeric_curvature(Vec2 p, double h = 1e-3) const {
        const double lap = (log_factor({p.x + h, p.y}) + log_factor({p.x - h, p.y}) +
                            log_factor({p.x, p.y + h}) + log_factor({p.x, p.y - h}) -
                            4.0 * log_factor(p)) /
                           (h * h);
        const double f = factor(p);
        return -lap / (f * f);
    }

  private:
    ChartKind kind_;
};

inline bool operator==(const ConformalChart& a, const ConformalChart& b) {
    return a.kind() == b.kind();
}

}  // namespace vertexlab
