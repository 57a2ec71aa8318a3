#pragma once

#include "rdc/jet.hpp"

#include <string>

namespace rdc {

/// Convection form of the equation family.
enum class Family {
    PowerConvM,  ///< U_t = [U^m U_x]_x + lambda U^m U_x + C(U)
    PowerConvM1, ///< U_t = [U^m U_x]_x + lambda U^(m+1) U_x + C(U)
};

/// Reaction term C(U).
enum class Reaction {
    T1i,   ///< (l1 U^(m+1) + l2)(U^(-m) - l3)
    T1ii,  ///< (l1 ln U + l2)(U - l3), m = -1
    T1iii, ///< l2 U^(1/2) + l3, m = -1/2
    T2i,   ///< l1 U + l2 U^(-m)
    T2ii,  ///< (l1 U^(3/2) + l2 U^(1/2) + l3)(l1/(2 lambda^2) + U^(1/2)), m = -1/2
};

const char* to_string(Family f);
const char* to_string(Reaction r);

/// One concrete reaction-diffusion-convection equation
///   U_t = [U^m U_x]_x + conv + C(U),
/// with conv = lambda U^m U_x (PowerConvM) or lambda U^(m+1) U_x (PowerConvM1).
struct EquationSpec {
    Family family{Family::PowerConvM};
    Reaction reaction{Reaction::T1i};
    double m{};      ///< diffusion exponent (fixed to -1 for T1ii, -1/2 for T1iii/T2ii)
    double lambda{}; ///< convection coefficient, never 0
    double l1{}, l2{}, l3{};

    /// Throws ConstraintError when the parameter set violates the family's
    /// invariants (lambda = 0, m = -1 for a power case, ...).
    void validate() const;

    /// True when evaluation requires U > 0 (non-integer powers or ln U).
    bool needs_positive_u() const;

    double reaction_value(double u) const;
    Jet2 reaction_jet(const Jet2& u) const;

    /// Discriminant that selects the solution branch:
    /// lambda^2 + 4 l1 (m+1) l3 for T1i, lambda^2 + 4 l1 l3 for T1ii.
    /// UsageError for other reaction classes.
    double discriminant() const;

    /// Pointwise residual U_t - (m U^(m-1) U_x^2 + U^m U_xx) - conv - C(U).
    /// Exactly zero characterizes a solution.
    double residual(const Jet2& jet) const;

    /// Residual normalized by (1 + |U_t| + |U_xx|). Steep exponential
    /// solutions otherwise produce misleading absolute residuals.
    double residual_normalized(const Jet2& jet) const;

    std::string describe() const;
};

} // namespace rdc
