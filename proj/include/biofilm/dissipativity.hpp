#ifndef BIOFILM_DISSIPATIVITY_HPP
#define BIOFILM_DISSIPATIVITY_HPP

/// Equilibrium analysis of the source term: the factorization
/// G(u) = D(u, ubar) (u - ubar), the symmetrized product A0*D at the
/// equilibrium, and the Routh-Hurwitz test deciding whether the source is
/// totally dissipative there.

#include <array>
#include <vector>

#include "biofilm/types.hpp"

namespace biofilm {

/// Coefficients of lambda^3 + a1 lambda^2 + a2 lambda + a3, the
/// characteristic polynomial of the (negated) 3x3 biological block.
/// Reported for the block normalized by its common positive factor
/// gamma/(kB - kD), so the units are rate^2, rate^4, rate^6.
struct RhCoefficients {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
};

/// Outcome of the total-dissipativity test at the equilibrium point.
struct DissipativityReport {
    RhCoefficients coeffs;
    bool rh1 = false;              ///< a1 > 0
    bool rh2 = false;              ///< a3 > 0
    bool rh3 = false;              ///< a1*a2 - a3 > 0
    double block44 = 0.0;          ///< decoupled momentum entry of sym(A0*D)
    bool block44_negative = false;
    bool verdict = false;          ///< all RH conditions AND block44 < 0

    // Independent route: eigenvalues of the full 4x4 symmetric part.
    double max_sym_eigenvalue = 0.0;
    bool eig_negative_definite = false;  ///< max eig < -1e-14 * ||S||_max
    bool eig_marginal = false;           ///< |max eig| within the threshold band
};

/// Side-by-side comparison of the numerically assembled coefficients with
/// hand-derived closed forms kept as a diagnostic. The a1 and a2 closed forms
/// are known to disagree with the assembled block (suspected transcription
/// defects); the comparison is reported, never asserted.
struct CoefficientCrossCheck {
    RhCoefficients numeric;
    RhCoefficients closed_form;
    std::array<double, 3> relative_difference{};  ///< |num - closed| / max(|num|, |closed|)
};

/// One grid point of a parameter-family sweep.
struct SweepRow {
    double a = 0.0;
    RhCoefficients coeffs;
    bool rh1 = false;
    bool rh2 = false;
    bool rh3 = false;
    bool verdict = false;
};

/// Sweep over the one-parameter coefficient family, with each verdict
/// transition refined by bisection.
struct SweepResult {
    std::vector<SweepRow> rows;
    std::vector<double> transitions;  ///< refined to width <= 1e-4 in a
};

/// The unique interior rest state:
///   B = (1 - kD/kB) / (1 + alpha*kD/kN + kD*kE/(eps*kB)),
///   E = B * kE*kD/(eps*kB),  D = B * alpha*kD/kN,  v = 0,  L = kD/kB.
/// Throws NoPositiveEquilibrium if kB <= kD.
EquilibriumPoint equilibrium(const ModelParams& p);

/// Matrix D(u, ubar) with G(u) = D(u, ubar) (u - ubar) exactly for every
/// admissible u (0 < L < 1); reduces at u = ubar to the equilibrium matrix
///   row 1: (-B kB, -B kB, -B kB, 0)
///   row 2: (kE (L - Bbar), -(eps + kE Bbar), -kE Bbar, 0)
///   row 3: (kN D / Bbar, 0, -kN B / Bbar, 0)
///   entry (4,4): (gL(u) - M) / (L (1 - L)).
Mat4 dissipation_matrix(const PhaseState& u, const EquilibriumPoint& ubar,
                        const ModelParams& p);

/// Symmetric part (A0 D + (A0 D)^T)/2 evaluated at the equilibrium, built
/// numerically from symmetrizer() and dissipation_matrix(). Rows/columns 1-3
/// decouple from the momentum entry (4,4) = -kB^2 M Bbar / (kD (kB - kD)).
Mat4 symmetrized_A0D(const ModelParams& p);

/// a1 = -trace, a2 = sum of principal 2x2 minors, a3 = -determinant of the
/// normalized 3x3 block of symmetrized_A0D.
RhCoefficients rh_coefficients(const ModelParams& p);

/// Routh-Hurwitz sign conditions for a cubic to have all roots with
/// negative real part: (a1 > 0, a3 > 0, a1*a2 - a3 > 0).
std::array<bool, 3> rh_check(double a1, double a2, double a3);

/// Full total-dissipativity test at the equilibrium, with both the
/// Routh-Hurwitz route (authoritative verdict) and the eigenvalue route
/// recorded for cross-checking.
DissipativityReport is_totally_dissipative(const ModelParams& p);

/// Hand-derived closed forms of the coefficients, kept only for the
/// diagnostic comparison in CoefficientCrossCheck.
RhCoefficients closed_form_rh_coefficients(const ModelParams& p);

CoefficientCrossCheck coefficient_crosscheck(const ModelParams& p);

/// One-parameter coefficient family:
///   eps = 1.25e-7, kN = 10 a eps, kE = 100 a eps, kD = 2 a eps,
///   kB = 70 a eps, alpha = 0.25; gamma and M from the supplied defaults.
/// Throws InvalidParameter if a <= 0.
ModelParams param_family(double a, double gamma = 1.0, double M = 1e-6);

/// Evaluates is_totally_dissipative(param_family(a)) on the grid
/// a = a_min, a_min + step, ..., a_max and refines every verdict change by
/// bisection. Requires 0 < a_min <= a_max and step > 0.
SweepResult sweep(double a_min, double a_max, double step, double gamma = 1.0,
                  double M = 1e-6);

}  // namespace biofilm

#endif  // BIOFILM_DISSIPATIVITY_HPP
