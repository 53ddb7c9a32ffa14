#ifndef BIOFILM_MODEL_HPP
#define BIOFILM_MODEL_HPP

/// Algebraic structure of the reduced four-equation mixture system
///
///     d/dt (B, E, D, v) + d/dx F(u) = G(u)
///
/// on states u = (B, E, D, v) with liquid fraction L = 1 - (B + E + D).
/// Everything here is a pure function of its inputs.

#include <array>

#include "biofilm/types.hpp"

namespace biofilm {

/// L = 1 - (B + E + D). No validity check; callers needing 0 < L < 1
/// go through the throwing operations below.
double liquid_fraction(const PhaseState& u);

/// Liquid-phase velocity recovered from the zero-mean-flow constraint,
/// vL = ((L - 1)/L) v. Requires 0 < L < 1.
double liquid_velocity(const PhaseState& u);

/// Mass exchange and momentum source terms:
///   gB = kB*B*L - kD*B,  gE = kE*B*L - eps*E,  gD = alpha*kD*B - kN*D,
///   gv = (gL - M) v / (L (1 - L))   with gL = -(gB + gE + gD).
/// Requires 0 < L < 1.
ReactionVector reaction(const PhaseState& u, const ModelParams& p);

/// Flux F(u) = (B v, E v, D v, (3L-2) v^2 / (2L) + gamma (L + ln(1-L))).
/// Requires 0 < L < 1 (log singularity at L = 1, division at L = 0).
Vec4 flux(const PhaseState& u, const ModelParams& p);

/// eta = L*gamma/(1-L) - v^2/L^2. Positive exactly on the symmetrizable set.
double eta(const PhaseState& u, const ModelParams& p);

/// Delta = L*gamma/(1-L) - v^2/L. Nonnegative iff the characteristic speeds
/// are real; Delta > eta whenever v != 0.
double delta(const PhaseState& u, const ModelParams& p);

/// Jacobian dF/du:
///   rows (v,0,0,B), (0,v,0,E), (0,0,v,D), (eta,eta,eta,(3L-2)v/L).
Mat4 jacobian(const PhaseState& u, const ModelParams& p);

/// Diagonal positive symmetrizer A0 = diag(eta, B*eta/E, B*eta/D, B);
/// A0 * jacobian(u) is symmetric. Requires E > 0, D > 0, 0 < L < 1 and
/// eta > 0 (throws NotSymmetrizable otherwise).
Mat4 symmetrizer(const PhaseState& u, const ModelParams& p);

/// Characteristic speeds {v, v, (2L-1)v/L +- sqrt((1-L)*Delta)}, ascending.
/// Throws ComplexEigenvalues if Delta < 0.
std::array<double, 4> eigenvalues(const PhaseState& u, const ModelParams& p);

/// Largest |lambda| over the four characteristic speeds.
double max_abs_eigenvalue(const PhaseState& u, const ModelParams& p);

/// Admissible velocity magnitude at liquid fraction L:
/// L^(3/2) gamma^(1/2) / (1-L)^(1/2).
double hyperbolic_velocity_bound(double L, double gamma);

/// True iff 0 < L < 1 and |v| is strictly below the admissible bound
/// (equivalently eta > 0). Never throws.
bool in_hyperbolic_domain(const PhaseState& u, const ModelParams& p);

}  // namespace biofilm

#endif  // BIOFILM_MODEL_HPP
