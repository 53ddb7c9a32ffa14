#ifndef BIOFILM_ANALYSIS_HPP
#define BIOFILM_ANALYSIS_HPP

/// Discrete Sobolev norms of the deviation from equilibrium, the
/// sup-plus-integral functional over a norm history, and log-linear
/// exponential-decay fitting.

#include <cstddef>
#include <vector>

#include "biofilm/field.hpp"

namespace biofilm {

struct Norms {
    double l2 = 0.0;
    double h1 = 0.0;
    double h2 = 0.0;
};

/// One per-step record of a simulation: time, the three Sobolev norms of
/// u - ubar and the energy 0.5 * h2^2.
struct NormSample {
    double t = 0.0;
    double l2 = 0.0;
    double h1 = 0.0;
    double h2 = 0.0;
    double energy = 0.0;
};

struct NormTrace {
    std::vector<NormSample> samples;
    double dx = 0.0;
};

/// Result of a log-linear least-squares fit h2(t) ~ C1 * h2(0) * exp(-beta t).
struct DecayFit {
    double beta = 0.0;       ///< decay rate (positive means decay)
    double C1 = 0.0;         ///< prefactor relative to the initial h2
    double r_squared = 0.0;  ///< goodness of the regression
    double window_start = 0.0;
    double window_end = 0.0;
    std::size_t samples_used = 0;
};

/// Discrete L2/H1/H2 norms of w = u - ubar:
///   l2 = sqrt(sum |w_i|^2 dx), derivatives by second-order central
/// differences (wrapped for periodic boundaries, one-sided at the ends for
/// equilibrium-Dirichlet). Needs at least 5 cells.
Norms discrete_norms(const FieldState& field, const EquilibriumPoint& ubar,
                     double dx, BoundaryType bc);

/// N_l(t) = sqrt( sup_{tau <= t} ||w(tau)||_l^2 + int_0^t ||w||_l^2 dtau ),
/// trapezoidal quadrature over the recorded samples up to time t.
/// l selects the norm order: 0 -> l2, 1 -> h1, 2 -> h2.
double functional_N(const NormTrace& trace, int l, double t);

/// Least-squares line through (t, ln h2) over [t_start, t_end];
/// beta = -slope, C1 = exp(intercept) / h2(first trace sample). Samples with
/// h2 <= 0 shrink the window (reported in the result); fewer than 10 usable
/// samples throws InsufficientData.
DecayFit fit_decay(const NormTrace& trace, double t_start, double t_end);

}  // namespace biofilm

#endif  // BIOFILM_ANALYSIS_HPP
