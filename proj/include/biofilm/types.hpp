#ifndef BIOFILM_TYPES_HPP
#define BIOFILM_TYPES_HPP

#include <array>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace biofilm {

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

/// Pointwise state of the mixture: volume fractions of bacteria (B),
/// extracellular matrix (E) and dead cells (D), plus the common solid-phase
/// transport velocity v. The liquid fraction L = 1 - (B + E + D) is derived.
struct PhaseState {
    double B = 0.0;
    double E = 0.0;
    double D = 0.0;
    double v = 0.0;

    Vec4 to_vector() const { return Vec4(B, E, D, v); }
    static PhaseState from_vector(const Vec4& u) { return {u[0], u[1], u[2], u[3]}; }
};

/// Physical coefficients of the model. Rates are 1/time, alpha is
/// dimensionless, gamma is a pressure-like stiffness (velocity^2) and M an
/// interphase friction coefficient (1/time).
struct ModelParams {
    double kB = 0.0;     ///< bacteria growth rate
    double kE = 0.0;     ///< matrix (EPS) growth rate
    double kD = 0.0;     ///< bacteria death rate
    double kN = 0.0;     ///< dead-cell consumption rate
    double eps = 0.0;    ///< matrix decay rate
    double alpha = 0.0;  ///< liquid/dead-cell transfer coefficient
    double gamma = 1.0;  ///< pressure stiffness
    double M = 1e-6;     ///< interphase friction

    /// Reference coefficient set (gamma = 1, M = 1e-6).
    static ModelParams table1();

    /// table1 with all rates and M scaled by 1e6 (gamma unchanged); makes
    /// relaxation observable within O(10) time units.
    static ModelParams fast();

    /// Throws InvalidParameter unless every coefficient is strictly positive.
    void validate() const;
};

/// Mass exchange rates (gB, gE, gD), the implied liquid-phase rate
/// gL = -(gB + gE + gD), and the momentum source gv.
struct ReactionVector {
    double gB = 0.0;
    double gE = 0.0;
    double gD = 0.0;
    double gv = 0.0;

    double gL() const { return -(gB + gE + gD); }

    Vec4 to_vector() const { return Vec4(gB, gE, gD, gv); }
};

/// The unique interior rest state of the reaction terms. v is always zero
/// and L = kD / kB.
struct EquilibriumPoint {
    double B = 0.0;
    double E = 0.0;
    double D = 0.0;
    double v = 0.0;
    double L = 0.0;

    PhaseState as_state() const { return {B, E, D, v}; }
};

// ---------------------------------------------------------------------------
// Error types. Names follow the failure they report; all derive from
// std::runtime_error (or a std subtype) so callers may catch coarsely.
// ---------------------------------------------------------------------------

/// State outside the admissible set of an operation (e.g. L not in (0,1)).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// eta(u) <= 0: no positive symmetrizer exists at this state.
struct NotSymmetrizable : std::domain_error {
    using std::domain_error::domain_error;
};

/// Delta(u) < 0: the characteristic speeds are not real.
struct ComplexEigenvalues : std::domain_error {
    using std::domain_error::domain_error;
};

/// kB <= kD: the interior equilibrium would have nonpositive fractions.
struct NoPositiveEquilibrium : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct GridTooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct OutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InsufficientData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPositiveNorm : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonFiniteValue : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace biofilm

#endif  // BIOFILM_TYPES_HPP
