#pragma once
#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "vertexlab/errors.hpp"
#include "vertexlab/jet.hpp"

namespace vertexlab {

// Real trigonometric polynomial
//   f(t) = a_0/2 + sum_k a_k cos(k w t) + b_k sin(k w t),   w = 2 pi / period,
// fitted to uniform periodic samples by the type-I DFT. Supplies exact jets of
// the interpolant, which is the "smooth periodic interpolation" used for
// shot metric circles and arclength resampling. A relative cutoff drops modes
// below the noise floor of the samples (ODE endpoint error) so that
// differentiation does not amplify them.
class TrigSeries {
  public:
    TrigSeries(std::vector<double> cos_coeff, std::vector<double> sin_coeff, double period)
        : a_(std::move(cos_coeff)), b_(std::move(sin_coeff)), period_(period) {}

    static TrigSeries fit(std::span<const double> samples, double period,
                          double rel_cutoff = 0.0) {
        const int n = static_cast<int>(samples.size());
        if (n < 4) throw ParameterError("too few samples for trigonometric interpolation");
        const int m = n / 2;
        std::vector<double> a(m + 1, 0.0), b(m + 1, 0.0);
        for (int k = 0; k <= m; ++k) {
            double ca = 0, cb = 0;
            for (int j = 0; j < n; ++j) {
                const double ang = 2.0 * std::numbers::pi * k * j / n;
                ca += samples[j] * std::cos(ang);
                cb += samples[j] * std::sin(ang);
            }
            a[k] = 2.0 * ca / n;
            b[k] = 2.0 * cb / n;
        }
        // Shared-endpoint modes carry half weight in the reconstruction.
        a[0] *= 0.5;
        b[0] = 0.0;
        if (n % 2 == 0) {
            a[m] *= 0.5;
            b[m] = 0.0;
        }
        if (rel_cutoff > 0) {
            double top = 0;
            for (int k = 1; k <= m; ++k) top = std::max(top, std::hypot(a[k], b[k]));
            const double floor = rel_cutoff * top;
            for (int k = 1; k <= m; ++k)
                if (std::hypot(a[k], b[k]) < floor) a[k] = b[k] = 0.0;
        }
        return TrigSeries(std::move(a), std::move(b), period);
    }

    double period() const { return period_; }
    const std::vector<double>& cos_coefficients() const { return a_; }
    const std::vector<double>& sin_coefficients() const { return b_; }

    Jet eval(double t) const {
        const double w = 2.0 * std::numbers::pi / period_;
        Jet out{a_[0], 0, 0, 0};
        for (std::size_t k = 1; k < a_.size(); ++k) {
            if (a_[k] == 0.0 && b_[k] == 0.0) continue;
            const double f = k * w;
            const double c = std::cos(f * t), s = std::sin(f * t);
            const double u = a_[k] * c + b_[k] * s;
            const double v = -a_[k] * s + b_[k] * c;  // u'/f
            out.f += u;
            out.d1 += f * v;
            out.d2 -= f * f * u;
            out.d3 -= f * f * f * v;
        }
        return out;
    }

    double value(double t) const { return eval(t).f; }

  private:
    std::vector<double> a_, b_;
    double period_;
};

}  // namespace vertexlab
