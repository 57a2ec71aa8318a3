#include "rdc/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rdc {

const char* to_string(CubicKind kind) {
    switch (kind) {
        case CubicKind::TripleRoot: return "TripleRoot";
        case CubicKind::RealPlusDouble: return "RealPlusDouble";
        case CubicKind::ThreeDistinct: return "ThreeDistinct";
        case CubicKind::OneRealPair: return "OneRealPair";
    }
    return "?";
}

std::vector<double> CubicSolution::real_roots() const {
    switch (kind) {
        case CubicKind::TripleRoot: return {k1};
        case CubicKind::RealPlusDouble: return {k1, k2};
        case CubicKind::ThreeDistinct: return {k1, k2, k3};
        case CubicKind::OneRealPair: return {k1};
    }
    return {};
}

double classification_band(double p, double q) {
    return 1e-12 * (1.0 + std::abs(p * p * p) + q * q);
}

CubicKind classify(double p, double q) {
    const double disc = p * p * p + q * q;
    if (std::abs(disc) <= classification_band(p, q)) {
        // boundary: triple root only when both coefficients vanish
        if (std::abs(p) <= 1e-12 && std::abs(q) <= 1e-12) return CubicKind::TripleRoot;
        return CubicKind::RealPlusDouble;
    }
    return disc < 0.0 ? CubicKind::ThreeDistinct : CubicKind::OneRealPair;
}

double cubic_residual(double p, double q, double k) {
    return std::abs(k * k * k + 3.0 * p * k + 2.0 * q);
}

namespace {

// Three distinct real roots, p^3 + q^2 < 0 (so p < 0). The arctan-based
// formulas presume q != 0; extracting the angle with atan2 keeps the q -> 0
// limit stable and reproduces them for either sign of q.
void solve_three_distinct(double p, double q, CubicSolution& out) {
    const double s = std::sqrt(-p);
    const double s3 = s * s * s;
    const double rad = std::sqrt(std::max(0.0, -(p * p * p + q * q)));
    const double phi = std::atan2(rad, -q); // in (0, pi)

    const double t0 = 2.0 * s * std::cos(phi / 3.0);
    const double t1 = 2.0 * s * std::cos(phi / 3.0 - 2.0 * std::numbers::pi / 3.0);
    const double t2 = 2.0 * s * std::cos(phi / 3.0 - 4.0 * std::numbers::pi / 3.0);

    const double q_band = 1e-14 * (1.0 + s3);
    if (std::abs(q) <= q_band) {
        out.k1 = 0.0;
        out.k2 = std::sqrt(-3.0 * p);
        out.k3 = -out.k2;
    } else if (q > 0.0) {
        out.k1 = t2;
        out.k2 = t0;
        out.k3 = t1;
    } else {
        out.k1 = t0;
        out.k2 = t1;
        out.k3 = t2;
    }
}

// One real root, conjugate pair. Cube-root arguments are rationalized to
// avoid cancellation when |p^3| << q^2.
void solve_one_real_pair(double p, double q, CubicSolution& out) {
    const double rad = std::sqrt(p * p * p + q * q);
    double ca = -q + rad; // cbrt argument A^3
    double cb = q + rad;  // cbrt argument B^3
    if (q > 0.0) ca = p * p * p / cb;
    else if (q < 0.0) cb = p * p * p / ca;
    const double A = std::cbrt(ca);
    const double B = std::cbrt(cb);

    out.k1 = A - B;             // real root alpha
    out.k2 = out.k3 = -0.5 * (A - B); // real part a (alpha = -2a)
    out.b = 0.5 * std::sqrt(3.0) * (A + B);
}

} // namespace

CubicSolution solve_cubic(double p, double q) {
    CubicSolution out;
    out.p = p;
    out.q = q;
    out.discriminant = p * p * p + q * q;
    out.kind = classify(p, q);

    switch (out.kind) {
        case CubicKind::TripleRoot:
            out.k1 = out.k2 = out.k3 = 0.0;
            break;
        case CubicKind::RealPlusDouble: {
            const double a2 = std::cbrt(q);
            out.k1 = -2.0 * a2;
            out.k2 = out.k3 = a2;
            break;
        }
        case CubicKind::ThreeDistinct:
            solve_three_distinct(p, q, out);
            break;
        case CubicKind::OneRealPair:
            solve_one_real_pair(p, q, out);
            break;
    }
    return out;
}

} // namespace rdc
