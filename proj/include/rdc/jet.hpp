#pragma once

#include "rdc/errors.hpp"

#include <cmath>

namespace rdc {

/// Value of a scalar field together with the exact partials needed by the
/// residual operator: first order in t, second order in x. The mixed
/// partial dt dx is never required and never tracked.
///
/// Arithmetic propagates derivatives exactly (to rounding), so expressions
/// composed from seeds carry analytic, not numerical, derivatives.
struct Jet2 {
    double u{};   ///< field value
    double ut{};  ///< du/dt
    double ux{};  ///< du/dx
    double uxx{}; ///< d2u/dx2

    constexpr Jet2() = default;
    constexpr Jet2(double u_, double ut_, double ux_, double uxx_)
        : u(u_), ut(ut_), ux(ux_), uxx(uxx_) {}

    static constexpr Jet2 constant(double c) { return {c, 0.0, 0.0, 0.0}; }
    static constexpr Jet2 seed_t(double t) { return {t, 1.0, 0.0, 0.0}; }
    static constexpr Jet2 seed_x(double x) { return {x, 0.0, 1.0, 0.0}; }
};

constexpr Jet2 operator+(const Jet2& a, const Jet2& b) {
    return {a.u + b.u, a.ut + b.ut, a.ux + b.ux, a.uxx + b.uxx};
}

constexpr Jet2 operator-(const Jet2& a, const Jet2& b) {
    return {a.u - b.u, a.ut - b.ut, a.ux - b.ux, a.uxx - b.uxx};
}

constexpr Jet2 operator-(const Jet2& a) { return {-a.u, -a.ut, -a.ux, -a.uxx}; }

// (ab)_xx = a_xx b + 2 a_x b_x + a b_xx
constexpr Jet2 operator*(const Jet2& a, const Jet2& b) {
    return {a.u * b.u,
            a.ut * b.u + a.u * b.ut,
            a.ux * b.u + a.u * b.ux,
            a.uxx * b.u + 2.0 * a.ux * b.ux + a.u * b.uxx};
}

constexpr Jet2 operator+(const Jet2& a, double c) { return {a.u + c, a.ut, a.ux, a.uxx}; }
constexpr Jet2 operator+(double c, const Jet2& a) { return a + c; }
constexpr Jet2 operator-(const Jet2& a, double c) { return {a.u - c, a.ut, a.ux, a.uxx}; }
constexpr Jet2 operator-(double c, const Jet2& a) { return {c - a.u, -a.ut, -a.ux, -a.uxx}; }
constexpr Jet2 operator*(const Jet2& a, double c) { return {a.u * c, a.ut * c, a.ux * c, a.uxx * c}; }
constexpr Jet2 operator*(double c, const Jet2& a) { return a * c; }
constexpr Jet2 operator/(const Jet2& a, double c) { return a * (1.0 / c); }

inline Jet2 operator/(const Jet2& a, const Jet2& b) {
    if (b.u == 0.0) throw DomainError("jet division by zero-valued jet", b.u);
    const double inv = 1.0 / b.u;
    const double v = a.u * inv;
    // (a/b)_xx = (a_xx - 2 (a/b)_x b_x - (a/b) b_xx) / b
    const double vx = (a.ux - v * b.ux) * inv;
    return {v,
            (a.ut - v * b.ut) * inv,
            vx,
            (a.uxx - 2.0 * vx * b.ux - v * b.uxx) * inv};
}

inline Jet2 operator/(double c, const Jet2& b) { return Jet2::constant(c) / b; }

/// Chain rule for an outer map with value f0 and derivatives f1, f2 at g.u.
constexpr Jet2 compose(const Jet2& g, double f0, double f1, double f2) {
    return {f0, f1 * g.ut, f1 * g.ux, f2 * g.ux * g.ux + f1 * g.uxx};
}

inline Jet2 exp(const Jet2& a) {
    const double e = std::exp(a.u);
    return compose(a, e, e, e);
}

inline Jet2 ln(const Jet2& a) {
    if (a.u <= 0.0) throw DomainError("ln of non-positive jet", a.u);
    const double inv = 1.0 / a.u;
    return compose(a, std::log(a.u), inv, -inv * inv);
}

inline Jet2 sqrt(const Jet2& a) {
    // strict: the second derivative diverges at 0
    if (a.u <= 0.0) throw DomainError("sqrt of non-positive jet", a.u);
    const double r = std::sqrt(a.u);
    const double d1 = 0.5 / r;
    return compose(a, r, d1, -0.5 * d1 / a.u);
}

inline Jet2 sin(const Jet2& a) {
    const double s = std::sin(a.u), c = std::cos(a.u);
    return compose(a, s, c, -s);
}

inline Jet2 cos(const Jet2& a) {
    const double s = std::sin(a.u), c = std::cos(a.u);
    return compose(a, c, -s, -c);
}

/// a^r. Integer exponents use the monomial rule (any base, except negative
/// exponents at 0); non-integer exponents follow exp(r ln a) and require a
/// strictly positive base.
inline Jet2 pow(const Jet2& a, double r) {
    if (r == 0.0) return Jet2::constant(1.0);
    if (r == 1.0) return a;
    const bool integral = std::nearbyint(r) == r && std::abs(r) < 1024.0;
    if (integral) {
        if (a.u == 0.0 && r < 0.0)
            throw DomainError("negative integer power of zero-valued jet", a.u);
    } else if (a.u <= 0.0) {
        throw DomainError("fractional power of non-positive jet", a.u);
    }
    const double f2 = r * (r - 1.0) * std::pow(a.u, r - 2.0);
    const double f1 = r * std::pow(a.u, r - 1.0);
    return compose(a, std::pow(a.u, r), f1, f2);
}

inline bool finite(const Jet2& a) {
    return std::isfinite(a.u) && std::isfinite(a.ut) &&
           std::isfinite(a.ux) && std::isfinite(a.uxx);
}

} // namespace rdc
