#ifndef BIOFILM_FIELD_HPP
#define BIOFILM_FIELD_HPP

#include <vector>

#include "biofilm/types.hpp"

namespace biofilm {

/// Uniform cell-centered grid on [x_min, x_max].
struct Grid1D {
    double x_min = -1.0;
    double x_max = 1.0;
    int nx = 400;

    double dx() const { return (x_max - x_min) / nx; }
    double center(int i) const { return x_min + (i + 0.5) * dx(); }

    /// Throws GridTooSmall / InvalidParameter on nx < 16 or dx <= 0.
    void validate() const;
};

enum class BoundaryType {
    Periodic,
    EquilibriumDirichlet,  ///< ghost cells frozen at the equilibrium point
};

/// Strictly positive floor kept under B, E, D and L during a simulation so
/// symmetrizer-based diagnostics stay defined; runs that hit it abort rather
/// than clamp.
inline constexpr double kComponentFloor = 1e-6;

/// Discrete field u(x_i, t) plus the clock of the run that produced it.
struct FieldState {
    std::vector<PhaseState> cells;
    double time = 0.0;
    long step = 0;
};

/// Index of the first cell violating the run invariants (finite values,
/// components above the floor, state inside the hyperbolic domain), or -1 if
/// the field is admissible throughout.
int first_invalid_cell(const FieldState& field, const ModelParams& p);

}  // namespace biofilm

#endif  // BIOFILM_FIELD_HPP
