#pragma once
#include <cmath>
#include <string>

#include "vertexlab/chart.hpp"
#include "vertexlab/geometry.hpp"

namespace vertexlab {

enum class DeckKind { EuclTranslation, EuclGlide, Parabolic, HypTranslation, HypGlide };

inline const char* to_string(DeckKind k) {
    switch (k) {
        case DeckKind::EuclTranslation: return "translation";
        case DeckKind::EuclGlide: return "glide";
        case DeckKind::Parabolic: return "parabolic";
        case DeckKind::HypTranslation: return "hyperbolic-translation";
        case DeckKind::HypGlide: return "hyperbolic-glide";
    }
    return "?";
}

// Single generator of a deck group acting on its chart:
//   EuclTranslation: (x,y) -> (x+L, y)          on R^2
//   EuclGlide:       (x,y) -> (x+L, -y)         on R^2
//   Parabolic:       (x,y) -> (x+L, y)          on H^2
//   HypTranslation:  (x,y) -> (e^L x, e^L y)    on H^2
//   HypGlide:        (x,y) -> (-e^L x, e^L y)   on H^2
// All are isometries of their chart; the glide kinds reverse orientation.
struct DeckMotion {
    DeckKind kind;
    double length;

    ConformalChart base_chart() const {
        switch (kind) {
            case DeckKind::EuclTranslation:
            case DeckKind::EuclGlide: return ConformalChart(ChartKind::Euclidean);
            default: return ConformalChart(ChartKind::HalfPlane);
        }
    }

    bool orientation_reversing() const {
        return kind == DeckKind::EuclGlide || kind == DeckKind::HypGlide;
    }

    // g^k applied to a point; closed forms per kind.
    Vec2 apply_power(Vec2 p, int k) const {
        switch (kind) {
            case DeckKind::EuclTranslation:
            case DeckKind::Parabolic: return {p.x + k * length, p.y};
            case DeckKind::EuclGlide:
                return {p.x + k * length, (k % 2 == 0) ? p.y : -p.y};
            case DeckKind::HypTranslation: {
                const double s = std::exp(k * length);
                return {s * p.x, s * p.y};
            }
            case DeckKind::HypGlide: {
                const double s = std::exp(k * length);
                const double sx = (k % 2 == 0) ? s : -s;
                return {sx * p.x, s * p.y};
            }
        }
        return p;
    }

    Vec2 apply(Vec2 p) const { return apply_power(p, 1); }
    Vec2 apply_inverse(Vec2 p) const { return apply_power(p, -1); }

    // The linear part (all five kinds are affine in chart coordinates).
    void jacobian(double& jxx, double& jyy) const {
        switch (kind) {
            case DeckKind::EuclTranslation:
            case DeckKind::Parabolic: jxx = 1; jyy = 1; break;
            case DeckKind::EuclGlide: jxx = 1; jyy = -1; break;
            case DeckKind::HypTranslation: jxx = std::exp(length); jyy = jxx; break;
            case DeckKind::HypGlide: jyy = std::exp(length); jxx = -jyy; break;
        }
    }

    Jet2 apply(const Jet2& j) const {
        double jxx, jyy;
        jacobian(jxx, jyy);
        const Vec2 moved = apply(j.p());
        Jet2 out{j.x * jxx, j.y * jyy};
        out.x.f = moved.x;
        out.y.f = moved.y;
        return out;
    }

    // Residual of the isometry property |dg(v)|_{g(p)} = |v|_p at one point.
    double isometry_residual(Vec2 p, Vec2 v) const {
        const ConformalChart chart = base_chart();
        double jxx, jyy;
        jacobian(jxx, jyy);
        const Vec2 jv{jxx * v.x, jyy * v.y};
        return std::abs(chart.factor(apply(p)) * norm(jv) - chart.factor(p) * norm(v));
    }
};

// A space form X/G described by its chart and one deck generator. A curve on
// the quotient is stored as a lift gamma with
//   gamma(t + P) = g^deck_power(gamma(t));
// deck_power is 1 for the perturbation families, 2 for the embedded glide
// pairs (each lift closes under g^2), and 0 for curves already closed in the
// cover (the two-vertex cylinder curve).
struct QuotientModel {
    ConformalChart chart;
    DeckMotion motion;
    int deck_power = 1;
};

// Canonical representative of the orbit of p: strip x in [0,L) for the
// translation kinds, radius in [1, e^L) for the hyperbolic kinds. Boundary
// points map to the left/inner edge. Idempotent.
inline Vec2 project_to_fundamental_domain(Vec2 p, const QuotientModel& quotient) {
    const DeckMotion& g = quotient.motion;
    switch (g.kind) {
        case DeckKind::EuclTranslation:
        case DeckKind::EuclGlide:
        case DeckKind::Parabolic: {
            const int k = static_cast<int>(std::floor(p.x / g.length));
            return g.apply_power(p, -k);
        }
        case DeckKind::HypTranslation:
        case DeckKind::HypGlide: {
            const double rho = norm(p);
            if (rho <= 0) return p;
            const int k = static_cast<int>(std::floor(std::log(rho) / g.length));
            return g.apply_power(p, -k);
        }
    }
    return p;
}

}  // namespace vertexlab
