#pragma once
#include <cmath>

namespace vertexlab {

// Univariate derivative number truncated at order 3: carries a value and its
// first three derivatives with respect to a single real parameter. Curves built
// from formulas are evaluated once through Jet arithmetic and get exact
// derivative closures for curvature work (kappa needs order 2, d(kappa)/ds and
// second-derivative classification need order 3).
struct Jet {
    double f{0};   // value
    double d1{0};  // first derivative
    double d2{0};  // second derivative
    double d3{0};  // third derivative
};

constexpr Jet jet_const(double c) { return {c, 0, 0, 0}; }
constexpr Jet jet_var(double t) { return {t, 1, 0, 0}; }

constexpr Jet operator+(const Jet& a, const Jet& b) {
    return {a.f + b.f, a.d1 + b.d1, a.d2 + b.d2, a.d3 + b.d3};
}
constexpr Jet operator-(const Jet& a, const Jet& b) {
    return {a.f - b.f, a.d1 - b.d1, a.d2 - b.d2, a.d3 - b.d3};
}
constexpr Jet operator-(const Jet& a) { return {-a.f, -a.d1, -a.d2, -a.d3}; }

// Leibniz to order 3.
constexpr Jet operator*(const Jet& a, const Jet& b) {
    return {a.f * b.f,
            a.d1 * b.f + a.f * b.d1,
            a.d2 * b.f + 2 * a.d1 * b.d1 + a.f * b.d2,
            a.d3 * b.f + 3 * a.d2 * b.d1 + 3 * a.d1 * b.d2 + a.f * b.d3};
}

constexpr Jet operator+(const Jet& a, double c) { return {a.f + c, a.d1, a.d2, a.d3}; }
constexpr Jet operator+(double c, const Jet& a) { return a + c; }
constexpr Jet operator-(const Jet& a, double c) { return {a.f - c, a.d1, a.d2, a.d3}; }
constexpr Jet operator-(double c, const Jet& a) { return {c - a.f, -a.d1, -a.d2, -a.d3}; }
constexpr Jet operator*(const Jet& a, double c) { return {a.f * c, a.d1 * c, a.d2 * c, a.d3 * c}; }
constexpr Jet operator*(double c, const Jet& a) { return a * c; }
constexpr Jet operator/(const Jet& a, double c) { return a * (1.0 / c); }

// Composition u(g) from the derivatives of u at g.f (Faa di Bruno, order 3).
constexpr Jet jet_compose(const Jet& g, double u0, double u1, double u2, double u3) {
    return {u0,
            u1 * g.d1,
            u2 * g.d1 * g.d1 + u1 * g.d2,
            u3 * g.d1 * g.d1 * g.d1 + 3 * u2 * g.d1 * g.d2 + u1 * g.d3};
}

inline Jet inverse(const Jet& a) {
    const double x = a.f;
    return jet_compose(a, 1 / x, -1 / (x * x), 2 / (x * x * x), -6 / (x * x * x * x));
}
inline Jet operator/(const Jet& a, const Jet& b) { return a * inverse(b); }
inline Jet operator/(double c, const Jet& b) { return inverse(b) * c; }

inline Jet sin(const Jet& a) {
    const double s = std::sin(a.f), c = std::cos(a.f);
    return jet_compose(a, s, c, -s, -c);
}
inline Jet cos(const Jet& a) {
    const double s = std::sin(a.f), c = std::cos(a.f);
    return jet_compose(a, c, -s, -c, s);
}
inline Jet sinh(const Jet& a) {
    const double s = std::sinh(a.f), c = std::cosh(a.f);
    return jet_compose(a, s, c, s, c);
}
inline Jet cosh(const Jet& a) {
    const double s = std::sinh(a.f), c = std::cosh(a.f);
    return jet_compose(a, c, s, c, s);
}
inline Jet exp(const Jet& a) {
    const double e = std::exp(a.f);
    return jet_compose(a, e, e, e, e);
}
inline Jet log(const Jet& a) {
    const double x = a.f;
    return jet_compose(a, std::log(x), 1 / x, -1 / (x * x), 2 / (x * x * x));
}
inline Jet sqrt(const Jet& a) {
    const double r = std::sqrt(a.f);
    return jet_compose(a, r, 0.5 / r, -0.25 / (r * a.f), 0.375 / (r * a.f * a.f));
}
// Real power with constant exponent.
inline Jet pow(const Jet& a, double p) {
    const double x = a.f;
    return jet_compose(a, std::pow(x, p), p * std::pow(x, p - 1),
                       p * (p - 1) * std::pow(x, p - 2),
                       p * (p - 1) * (p - 2) * std::pow(x, p - 3));
}

}  // namespace vertexlab
