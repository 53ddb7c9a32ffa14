#include "biofilm/solver.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "biofilm/dissipativity.hpp"
#include "biofilm/model.hpp"

namespace biofilm {

void Grid1D::validate() const {
    if (nx < 16) {
        throw GridTooSmall("grid needs nx >= 16, got " + std::to_string(nx));
    }
    if (!(x_max > x_min) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
        throw InvalidParameter("grid needs finite x_min < x_max");
    }
}

void SimConfig::validate() const {
    grid.validate();
    params.validate();
    if (!(cfl > 0.0) || cfl > 1.0) {
        throw InvalidParameter("cfl must lie in (0, 1], got " + std::to_string(cfl));
    }
    if (!(t_end >= 0.0) || !std::isfinite(t_end)) {
        throw InvalidParameter("t_end must be finite and nonnegative");
    }
    for (double a : perturbation.amplitude) {
        if (!std::isfinite(a)) throw InvalidParameter("perturbation amplitude must be finite");
    }
    if (perturbation.profile == PerturbationProfile::Gaussian &&
        !(perturbation.width > 0.0)) {
        throw InvalidParameter("gaussian perturbation needs width > 0");
    }
    if (perturbation.profile == PerturbationProfile::Sine &&
        !(perturbation.wavenumber > 0.0)) {
        throw InvalidParameter("sine perturbation needs wavenumber > 0");
    }
    if (!std::isfinite(perturbation.center)) {
        throw InvalidParameter("perturbation center must be finite");
    }
    if (!(domain_radius > 0.0)) {
        throw InvalidParameter("domain_radius must be > 0");
    }
}

namespace {

bool all_finite(const PhaseState& s) {
    return std::isfinite(s.B) && std::isfinite(s.E) && std::isfinite(s.D) &&
           std::isfinite(s.v);
}

bool above_floor(const PhaseState& s) {
    const double L = liquid_fraction(s);
    return s.B >= kComponentFloor && s.E >= kComponentFloor &&
           s.D >= kComponentFloor && L >= kComponentFloor;
}

std::string describe(const PhaseState& s) {
    return "(B=" + std::to_string(s.B) + ", E=" + std::to_string(s.E) +
           ", D=" + std::to_string(s.D) + ", v=" + std::to_string(s.v) + ")";
}

// Throws the abort type matching the first invalid cell, attaching the stage
// field as a diagnostic snapshot. No-op when the field is admissible.
void ensure_admissible(FieldState&& field, const ModelParams& p) {
    const int bad = first_invalid_cell(field, p);
    if (bad < 0) return;
    const PhaseState s = field.cells[bad];
    const long stepno = field.step;
    const double time = field.time;
    auto snapshot = std::make_shared<const FieldState>(std::move(field));
    if (!all_finite(s)) {
        throw NonFiniteValue("non-finite value at step " + std::to_string(stepno) +
                             ", cell " + std::to_string(bad) + " " + describe(s));
    }
    throw LeftHyperbolicDomain(
        "left hyperbolic domain at step " + std::to_string(stepno) + ", cell " +
            std::to_string(bad) + " " + describe(s),
        stepno, time, bad, s, std::move(snapshot));
}

double profile_value(const Perturbation& pert, const Grid1D& grid, double x) {
    switch (pert.profile) {
        case PerturbationProfile::Gaussian: {
            const double r = (x - pert.center) / pert.width;
            return std::exp(-r * r);
        }
        case PerturbationProfile::Sine:
            return std::sin(2.0 * M_PI * pert.wavenumber * (x - grid.x_min) /
                            (grid.x_max - grid.x_min));
        case PerturbationProfile::Uniform:
            return 1.0;
    }
    return 0.0;
}

}  // namespace

int first_invalid_cell(const FieldState& field, const ModelParams& p) {
    for (size_t i = 0; i < field.cells.size(); ++i) {
        const PhaseState& s = field.cells[i];
        if (!all_finite(s) || !above_floor(s) || !in_hyperbolic_domain(s, p)) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

FieldState init_perturbation(const SimConfig& cfg) {
    cfg.validate();
    const EquilibriumPoint eq = equilibrium(cfg.params);

    FieldState field;
    field.cells.resize(cfg.grid.nx);
    for (int i = 0; i < cfg.grid.nx; ++i) {
        const double prof = profile_value(cfg.perturbation, cfg.grid, cfg.grid.center(i));
        field.cells[i] = {eq.B + cfg.perturbation.amplitude[0] * prof,
                          eq.E + cfg.perturbation.amplitude[1] * prof,
                          eq.D + cfg.perturbation.amplitude[2] * prof,
                          eq.v + cfg.perturbation.amplitude[3] * prof};
    }

    const int bad = first_invalid_cell(field, cfg.params);
    if (bad >= 0) {
        const PhaseState s = field.cells[bad];
        auto snapshot = std::make_shared<const FieldState>(std::move(field));
        throw PerturbationTooLarge(
            "perturbation too large: cell " + std::to_string(bad) + " " +
                describe(s) + " is outside the hyperbolic domain or below the " +
                "component floor",
            bad, s, std::move(snapshot));
    }
    return field;
}

double max_wave_speed(const FieldState& state, const ModelParams& p) {
    double s = 0.0;
    for (const PhaseState& u : state.cells) {
        s = std::max(s, max_abs_eigenvalue(u, p));
    }
    return s;
}

Vec4 numerical_flux(const PhaseState& uL, const PhaseState& uR,
                    const ModelParams& p) {
    if (!in_hyperbolic_domain(uL, p) || !in_hyperbolic_domain(uR, p)) {
        throw DomainError("numerical flux needs both states inside the hyperbolic domain");
    }
    const double s = std::max(max_abs_eigenvalue(uL, p), max_abs_eigenvalue(uR, p));
    return 0.5 * (flux(uL, p) + flux(uR, p)) -
           0.5 * s * (uR.to_vector() - uL.to_vector());
}

std::vector<Vec4> rhs(const FieldState& state, const SimConfig& cfg) {
    const int nx = static_cast<int>(state.cells.size());
    const double dx = cfg.grid.dx();
    const PhaseState eq_state = equilibrium(cfg.params).as_state();

    // Extended array with one ghost cell per side.
    std::vector<const PhaseState*> ext(nx + 2);
    for (int i = 0; i < nx; ++i) ext[i + 1] = &state.cells[i];
    if (cfg.bc == BoundaryType::Periodic) {
        ext[0] = &state.cells[nx - 1];
        ext[nx + 1] = &state.cells[0];
    } else {
        ext[0] = &eq_state;
        ext[nx + 1] = &eq_state;
    }

    // Per-cell flux and speed, evaluated once.
    std::vector<Vec4> f(nx + 2);
    std::vector<double> sp(nx + 2);
    for (int i = 0; i < nx + 2; ++i) {
        f[i] = flux(*ext[i], cfg.params);
        sp[i] = max_abs_eigenvalue(*ext[i], cfg.params);
    }

    std::vector<Vec4> fh(nx + 1);
    for (int i = 0; i <= nx; ++i) {
        const double s = std::max(sp[i], sp[i + 1]);
        fh[i] = 0.5 * (f[i] + f[i + 1]) -
                0.5 * s * (ext[i + 1]->to_vector() - ext[i]->to_vector());
    }

    std::vector<Vec4> out(nx);
    for (int i = 0; i < nx; ++i) {
        out[i] = -(fh[i + 1] - fh[i]) / dx +
                 reaction(state.cells[i], cfg.params).to_vector();
    }
    return out;
}

double source_dt_cap(const ModelParams& p) {
    const EquilibriumPoint eq = equilibrium(p);
    const Mat4 d = dissipation_matrix(eq.as_state(), eq, p);
    Eigen::EigenSolver<Mat4> es(d, /*computeEigenvectors=*/false);
    const double rho = es.eigenvalues().cwiseAbs().maxCoeff();
    return rho > 0.0 ? 0.5 / rho : std::numeric_limits<double>::infinity();
}

FieldState step(const FieldState& state, const SimConfig& cfg, double dt_cap) {
    const int nx = static_cast<int>(state.cells.size());
    const double dx = cfg.grid.dx();

    double speed = max_wave_speed(state, cfg.params);
    if (cfg.bc == BoundaryType::EquilibriumDirichlet) {
        speed = std::max(speed, max_abs_eigenvalue(equilibrium(cfg.params).as_state(), cfg.params));
    }
    const double dt = std::min({cfg.cfl * dx / speed, source_dt_cap(cfg.params), dt_cap});
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw InvalidParameter("non-positive time step (dt = " + std::to_string(dt) + ")");
    }

    const long next_step = state.step + 1;
    const double next_time = state.time + dt;

    // Predictor stage.
    const std::vector<Vec4> k1 = rhs(state, cfg);
    FieldState stage;
    stage.cells.resize(nx);
    stage.time = next_time;
    stage.step = next_step;
    for (int i = 0; i < nx; ++i) {
        stage.cells[i] = PhaseState::from_vector(state.cells[i].to_vector() + dt * k1[i]);
    }
    ensure_admissible(FieldState(stage), cfg.params);

    // Corrector (Heun average).
    const std::vector<Vec4> k2 = rhs(stage, cfg);
    FieldState out;
    out.cells.resize(nx);
    out.time = next_time;
    out.step = next_step;
    for (int i = 0; i < nx; ++i) {
        out.cells[i] = PhaseState::from_vector(
            0.5 * state.cells[i].to_vector() +
            0.5 * (stage.cells[i].to_vector() + dt * k2[i]));
    }
    ensure_admissible(FieldState(out), cfg.params);
    return out;
}

SimResult simulate(const SimConfig& cfg) {
    cfg.validate();
    const EquilibriumPoint eq = equilibrium(cfg.params);
    const double dx = cfg.grid.dx();

    SimResult res;
    res.params_dissipative = is_totally_dissipative(cfg.params).verdict;
    res.trace.dx = dx;

    FieldState state = init_perturbation(cfg);

    const auto record = [&](const FieldState& f, bool force_snapshot) {
        const Norms n = discrete_norms(f, eq, dx, cfg.bc);
        res.trace.samples.push_back({f.time, n.l2, n.h1, n.h2, 0.5 * n.h2 * n.h2});
        res.max_wave_speed_seen =
            std::max(res.max_wave_speed_seen, max_wave_speed(f, cfg.params));
        for (const PhaseState& u : f.cells) {
            const double dev =
                std::max({std::abs(u.B - eq.B), std::abs(u.E - eq.E),
                          std::abs(u.D - eq.D), std::abs(u.v - eq.v)});
            res.max_deviation = std::max(res.max_deviation, dev);
        }
        const bool due = cfg.snapshot_every > 0 && f.step % cfg.snapshot_every == 0;
        if (force_snapshot || due) {
            if (res.snapshots.empty() || res.snapshots.back().step != f.step) {
                res.snapshots.push_back(f);
            }
        }
    };

    const double t_eps = 1e-12 * std::max(1.0, cfg.t_end);
    record(state, /*force_snapshot=*/true);

    while (state.time < cfg.t_end - t_eps) {
        try {
            state = step(state, cfg, cfg.t_end - state.time);
        } catch (const LeftHyperbolicDomain& e) {
            res.status = SimStatus::LeftDomain;
            res.abort = AbortInfo{e.step, e.time, e.cell, e.state, e.what()};
            res.final_state = *e.field;
            res.steps = state.step;
            res.stayed_in_omega = res.max_deviation <= cfg.domain_radius;
            return res;
        } catch (const NonFiniteValue& e) {
            res.status = SimStatus::NonFinite;
            res.abort = AbortInfo{state.step + 1, state.time, -1, PhaseState{}, e.what()};
            res.final_state = state;
            res.steps = state.step;
            res.stayed_in_omega = res.max_deviation <= cfg.domain_radius;
            return res;
        }
        const bool is_final = !(state.time < cfg.t_end - t_eps);
        record(state, /*force_snapshot=*/is_final);
    }

    res.final_state = state;
    res.steps = state.step;
    res.stayed_in_omega = res.max_deviation <= cfg.domain_radius;
    return res;
}

}  // namespace biofilm
