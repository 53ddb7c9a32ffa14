#ifndef BIOFILM_SOLVER_HPP
#define BIOFILM_SOLVER_HPP

/// Explicit finite-volume solver for the balance law
///     d/dt u + d/dx F(u) = G(u)
/// on an interval: Rusanov interface fluxes, unsplit source, SSP-RK2 time
/// stepping, with every stage checked against the hyperbolic domain.

#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "biofilm/analysis.hpp"
#include "biofilm/field.hpp"
#include "biofilm/types.hpp"

namespace biofilm {

enum class PerturbationProfile {
    Gaussian,  ///< unit-peak exp(-((x - center)/width)^2)
    Sine,      ///< sin(2 pi k (x - x_min) / (x_max - x_min))
    Uniform,   ///< constant 1
};

struct Perturbation {
    PerturbationProfile profile = PerturbationProfile::Gaussian;
    std::array<double, 4> amplitude = {0.0, 0.0, 0.0, 0.0};  ///< per component
    double width = 0.1;       ///< gaussian only
    double wavenumber = 1.0;  ///< sine only
    double center = 0.0;      ///< gaussian only
};

struct SimConfig {
    Grid1D grid;
    double cfl = 0.9;
    double t_end = 10.0;
    BoundaryType bc = BoundaryType::EquilibriumDirichlet;
    Perturbation perturbation;
    long snapshot_every = 100;  ///< <= 0 keeps only initial and final snapshots
    ModelParams params;
    double domain_radius = 0.1;  ///< max-norm ball around the equilibrium
                                 ///< reported on (not enforced) by simulate()

    /// Throws InvalidParameter / GridTooSmall on out-of-range settings.
    void validate() const;
};

/// Initial data left the admissible set (outside W or under the component
/// floor). Carries the offending cell and the constructed field for
/// diagnostics.
struct PerturbationTooLarge : std::runtime_error {
    PerturbationTooLarge(const std::string& msg, int cell_, PhaseState state_,
                         std::shared_ptr<const FieldState> field_)
        : std::runtime_error(msg), cell(cell_), state(state_),
          field(std::move(field_)) {}
    int cell;
    PhaseState state;
    std::shared_ptr<const FieldState> field;  ///< diagnostic snapshot
};

/// A time step produced a cell outside the hyperbolic domain (or under the
/// component floor). Carries the offending cell/state and the stage field.
struct LeftHyperbolicDomain : std::runtime_error {
    LeftHyperbolicDomain(const std::string& msg, long step_, double time_,
                         int cell_, PhaseState state_,
                         std::shared_ptr<const FieldState> field_)
        : std::runtime_error(msg), step(step_), time(time_), cell(cell_),
          state(state_), field(std::move(field_)) {}
    long step;
    double time;
    int cell;
    PhaseState state;
    std::shared_ptr<const FieldState> field;  ///< diagnostic snapshot
};

enum class SimStatus { Completed, LeftDomain, NonFinite };

struct AbortInfo {
    long step = 0;
    double time = 0.0;
    int cell = -1;
    PhaseState state;
    std::string message;
};

/// Everything a run produces. On abort the trace and snapshots cover the
/// completed steps and final_state holds the diagnostic field.
struct SimResult {
    SimStatus status = SimStatus::Completed;
    NormTrace trace;
    std::vector<FieldState> snapshots;
    FieldState final_state;
    long steps = 0;
    double max_wave_speed_seen = 0.0;
    double max_deviation = 0.0;  ///< max-norm distance from equilibrium seen
    bool stayed_in_omega = true;
    bool params_dissipative = true;
    std::optional<AbortInfo> abort;
};

/// u_i = ubar + amplitude (.) profile(x_i), validated cell by cell.
/// Throws PerturbationTooLarge if any cell leaves W or breaks the floor.
FieldState init_perturbation(const SimConfig& cfg);

/// Largest characteristic speed over all cells.
double max_wave_speed(const FieldState& state, const ModelParams& p);

/// Rusanov (local Lax-Friedrichs) two-point flux
///   0.5 (F(uL) + F(uR)) - 0.5 s (uR - uL),   s = max |lambda| over both states.
/// Throws DomainError if either state is outside W.
Vec4 numerical_flux(const PhaseState& uL, const PhaseState& uR,
                    const ModelParams& p);

/// Semi-discrete right-hand side -(f_{i+1/2} - f_{i-1/2})/dx + G(u_i) with
/// ghost cells per cfg.bc. Exposed so conservation properties can be checked
/// directly.
std::vector<Vec4> rhs(const FieldState& state, const SimConfig& cfg);

/// Time-step ceiling 0.5 / rho(D(ubar, ubar)) keeping the explicit source
/// update stable.
double source_dt_cap(const ModelParams& p);

/// One SSP-RK2 (Heun) step. The step size is
///   dt = min(cfl dx / max wave speed, source cap, dt_cap).
/// Both stages are validated; violations throw LeftHyperbolicDomain or
/// NonFiniteValue.
FieldState step(const FieldState& state, const SimConfig& cfg,
                double dt_cap = std::numeric_limits<double>::infinity());

/// Advance from the configured perturbation to t_end, recording norms every
/// step and snapshots every snapshot_every steps. Mid-run domain exits and
/// non-finite values are returned as an aborted status with diagnostics
/// rather than thrown.
SimResult simulate(const SimConfig& cfg);

}  // namespace biofilm

#endif  // BIOFILM_SOLVER_HPP
