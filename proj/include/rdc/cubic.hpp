#pragma once

#include <string>
#include <vector>

namespace rdc {

/// Classification of the depressed cubic k^3 + 3 p k + 2 q = 0 by the sign
/// of p^3 + q^2.
enum class CubicKind {
    TripleRoot,    ///< p = q = 0: k1 = k2 = k3 = 0
    RealPlusDouble,///< p^3 = -q^2 != 0: simple root -2 q^(1/3), double root q^(1/3)
    ThreeDistinct, ///< p^3 + q^2 < 0: three distinct real roots
    OneRealPair    ///< p^3 + q^2 > 0: one real root and a conjugate pair a +- i b
};

const char* to_string(CubicKind kind);

/// Classified roots of k^3 + 3 p k + 2 q = 0.
///
/// Root layout by kind:
///   TripleRoot:     k1 = k2 = k3 (= 0)
///   RealPlusDouble: k1 simple, k2 = k3 double
///   ThreeDistinct:  k1, k2, k3 in the label order of the trigonometric
///                   formulas (for q = 0 this is 0, sqrt(-3p), -sqrt(-3p))
///   OneRealPair:    k1 real; the pair is a +- i b with k2 = k3 = a, b > 0
struct CubicSolution {
    double p{}, q{};
    double discriminant{}; ///< p^3 + q^2
    CubicKind kind{};
    double k1{}, k2{}, k3{};
    double b{}; ///< imaginary part of the conjugate pair (OneRealPair only)

    std::vector<double> real_roots() const;
};

/// Tolerance band that decides "is p^3 + q^2 zero": values within
/// 1e-12 * (1 + |p|^3 + q^2) count as the boundary case.
double classification_band(double p, double q);

CubicKind classify(double p, double q);

/// Residual |k^3 + 3 p k + 2 q| of a candidate root.
double cubic_residual(double p, double q, double k);

CubicSolution solve_cubic(double p, double q);

} // namespace rdc
