#pragma once
#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <utility>
#include <variant>

#include "vertexlab/chart.hpp"
#include "vertexlab/deck.hpp"
#include "vertexlab/errors.hpp"
#include "vertexlab/geometry.hpp"
#include "vertexlab/revolution.hpp"

namespace vertexlab {

// Where a curve lives. For RevolutionSurface ambients the curve evaluator
// returns (t, theta) surface parameters instead of chart coordinates.
using Ambient = std::variant<ConformalChart, QuotientModel, RevolutionSurfacePtr>;

inline const ConformalChart* ambient_chart(const Ambient& ambient) {
    if (const auto* c = std::get_if<ConformalChart>(&ambient)) return c;
    if (const auto* q = std::get_if<QuotientModel>(&ambient)) return &q->chart;
    return nullptr;
}

inline const RevolutionSurfacePtr* ambient_surface(const Ambient& ambient) {
    return std::get_if<RevolutionSurfacePtr>(&ambient);
}

// Default profile grid size; VERTEXLAB_SAMPLES overrides.
inline int default_grid_samples() {
    static const int n = [] {
        if (const char* env = std::getenv("VERTEXLAB_SAMPLES")) {
            const int v = std::atoi(env);
            if (v >= 64) return v;
        }
        return 4096;
    }();
    return n;
}

// Periodic regular parametrized curve. The evaluator is defined on all of R
// (family formulas are global lifts); closure means
//   gamma(t + P) = g^m(gamma(t))
// with g^m the ambient quotient's closure motion (the identity for plain
// charts and surfaces). Evaluators built from formulas or trigonometric
// interpolants carry exact order-3 jets and are flagged analytic; anything
// differentiated numerically is not.
class ClosedCurve {
  public:
    using Evaluator = std::function<Jet2(double)>;

    ClosedCurve(double period, Evaluator eval, Ambient ambient, bool analytic,
                bool validate = true)
        : period_(period),
          eval_(std::move(eval)),
          ambient_(std::move(ambient)),
          analytic_(analytic) {
        if (!(period_ > 0)) throw ParameterError("curve period must be positive");
        if (validate) {
            const double res = closure_residual();
            if (!(res < 1e-8 * scale()))
                throw ParameterError("curve fails the periodic closure check");
        }
    }

    double period() const { return period_; }
    bool analytic() const { return analytic_; }
    const Ambient& ambient() const { return ambient_; }

    Jet2 jet(double t) const { return eval_(t); }
    Vec2 point(double t) const { return eval_(t).p(); }

    // Same evaluator, different metric; used by the chart-swap transfer maps.
    ClosedCurve with_ambient(Ambient ambient) const {
        return ClosedCurve(period_, eval_, std::move(ambient), analytic_, false);
    }

    // Max over probe points of |gamma(t+P) - g^m(gamma(t))|.
    double closure_residual(int probes = 16) const {
        double worst = 0;
        for (int i = 0; i < probes; ++i) {
            const double t = period_ * (i + 0.37) / probes;
            Vec2 expect = point(t);
            if (const auto* q = std::get_if<QuotientModel>(&ambient_))
                expect = q->motion.apply_power(expect, q->deck_power);
            worst = std::max(worst, distance(point(t + period_), expect));
        }
        return worst;
    }

    // Rough coordinate scale of the curve, for relative tolerances.
    double scale(int probes = 16) const {
        double s = 1.0;
        for (int i = 0; i < probes; ++i) {
            const Vec2 p = point(period_ * i / probes);
            s = std::max({s, std::abs(p.x), std::abs(p.y)});
        }
        return s;
    }

    double min_speed(int probes = 256) const {
        double m = std::numeric_limits<double>::infinity();
        for (int i = 0; i < probes; ++i) m = std::min(m, norm(jet(period_ * i / probes).d1()));
        return m;
    }

  private:
    double period_;
    Evaluator eval_;
    Ambient ambient_;
    bool analytic_;
};

}  // namespace vertexlab
