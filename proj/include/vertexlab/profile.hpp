#pragma once
#include <cstdio>
#include <functional>
#include <memory>
#include <ostream>
#include <vector>

#include "vertexlab/curvature.hpp"
#include "vertexlab/curve.hpp"
#include "vertexlab/fourier.hpp"

namespace vertexlab {

struct CurvatureSample {
    double t;            // curve parameter
    double s;            // metric arclength from the grid start
    Vec2 pos;            // chart coordinates or (t, theta)
    double kappa;        // geodesic curvature
    double kappa_prime;  // d(kappa)/ds
};

// Uniform-in-t curvature samples over one period, together with continuous
// kappa / kappa' evaluators for root refinement.
class CurvatureProfile {
  public:
    CurvatureProfile(std::vector<CurvatureSample> samples, double period, double arclength,
                     std::function<double(double)> kappa_fn,
                     std::function<double(double)> kappa_prime_fn)
        : samples_(std::move(samples)),
          period_(period),
          arclength_(arclength),
          kappa_fn_(std::move(kappa_fn)),
          kappa_prime_fn_(std::move(kappa_prime_fn)) {}

    const std::vector<CurvatureSample>& samples() const { return samples_; }
    double period() const { return period_; }
    double arclength() const { return arclength_; }
    double kappa(double t) const { return kappa_fn_(t); }
    double kappa_prime(double t) const { return kappa_prime_fn_(t); }

    double kappa_max_abs() const {
        double m = 0;
        for (const auto& s : samples_) m = std::max(m, std::abs(s.kappa));
        return m;
    }
    double kappa_prime_max_abs() const {
        double m = 0;
        for (const auto& s : samples_) m = std::max(m, std::abs(s.kappa_prime));
        return m;
    }

    // Column order is part of the interface: t,s,x,y,kappa,kappa_prime.
    void write_csv(std::ostream& os) const {
        os << "t,s,x,y,kappa,kappa_prime\n";
        char line[192];
        for (const auto& r : samples_) {
            std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.t, r.s,
                          r.pos.x, r.pos.y, r.kappa, r.kappa_prime);
            os << line;
        }
    }

  private:
    std::vector<CurvatureSample> samples_;
    double period_;
    double arclength_;
    std::function<double(double)> kappa_fn_, kappa_prime_fn_;
};

// Evaluate kappa and d(kappa)/ds on a uniform grid of n points over one
// period. kappa' comes from the analytic chain when the curve provides exact
// jets in a conformal chart, otherwise from 5-point central differences of
// kappa at the grid step.
inline CurvatureProfile curvature_profile(const ClosedCurve& curve, int n = 0) {
    if (n <= 0) n = default_grid_samples();
    const double period = curve.period();
    const double h = period / n;
    auto kappa_fn = kappa_evaluator(curve);
    auto kappa_prime_fn = kappa_rate_evaluator(curve, n);

    std::vector<CurvatureSample> rows;
    rows.reserve(n);
    double s = 0;
    double prev_speed = metric_speed(curve, 0.0);
    for (int i = 0; i < n; ++i) {
        const double t = i * h;
        const double speed = metric_speed(curve, t);
        if (i > 0) s += 0.5 * (prev_speed + speed) * h;  // trapezoid arclength
        prev_speed = speed;
        rows.push_back({t, s, curve.point(t), kappa_fn(t), kappa_prime_fn(t)});
    }
    const double total = s + 0.5 * (prev_speed + metric_speed(curve, period)) * h;
    return CurvatureProfile(std::move(rows), period, total, std::move(kappa_fn),
                            std::move(kappa_prime_fn));
}

// Resample a curve uniformly in metric arclength and reinterpolate. Used to
// check that vertex locations are parametrization-independent.
inline ClosedCurve resample_arclength(const ClosedCurve& curve, int n = 0) {
    if (n <= 0) n = default_grid_samples();
    const double period = curve.period();
    if (distance(curve.point(period), curve.point(0.0)) > 1e-8 * curve.scale())
        throw ParameterError("arclength resampling needs a curve closed in coordinates");
    // Cumulative arclength on a fine grid (trapezoid), then inverted by
    // monotone interpolation.
    const int m = 4 * n;
    std::vector<double> cum(m + 1, 0.0);
    double prev = metric_speed(curve, 0.0);
    for (int i = 1; i <= m; ++i) {
        const double speed = metric_speed(curve, period * i / m);
        cum[i] = cum[i - 1] + 0.5 * (prev + speed) * (period / m);
        prev = speed;
    }
    const double total = cum[m];
    std::vector<double> xs(n), ys(n);
    int j = 0;
    for (int i = 0; i < n; ++i) {
        const double target = total * i / n;
        while (j < m && cum[j + 1] < target) ++j;
        const double frac = (target - cum[j]) / std::max(cum[j + 1] - cum[j], 1e-300);
        const double t = period * (j + frac) / m;
        const Vec2 p = curve.point(t);
        xs[i] = p.x;
        ys[i] = p.y;
    }
    const auto sx = std::make_shared<TrigSeries>(TrigSeries::fit(xs, 2 * std::numbers::pi, 0.0));
    const auto sy = std::make_shared<TrigSeries>(TrigSeries::fit(ys, 2 * std::numbers::pi, 0.0));
    auto eval = [sx, sy](double t) -> Jet2 { return {sx->eval(t), sy->eval(t)}; };
    return ClosedCurve(2 * std::numbers::pi, eval, curve.ambient(), true, false);
}

}  // namespace vertexlab
