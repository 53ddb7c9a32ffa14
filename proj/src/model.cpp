#include "biofilm/model.hpp"

#include <algorithm>
#include <cmath>

namespace biofilm {

namespace {

// All operations below divide by L, 1-L or take ln(1-L).
double interior_liquid_fraction(const PhaseState& u) {
    const double L = liquid_fraction(u);
    if (!(L > 0.0 && L < 1.0)) {
        throw DomainError("liquid fraction L = " + std::to_string(L) +
                          " outside (0,1); state not admissible");
    }
    return L;
}

}  // namespace

ModelParams ModelParams::table1() {
    ModelParams p;
    p.kB = 8e-6;
    p.kE = 12e-6;
    p.kD = 2e-7;
    p.kN = 1e-6;
    p.eps = 1.25e-7;
    p.alpha = 0.25;
    p.gamma = 1.0;
    p.M = 1e-6;
    return p;
}

ModelParams ModelParams::fast() {
    ModelParams p = table1();
    const double scale = 1e6;
    p.kB *= scale;
    p.kE *= scale;
    p.kD *= scale;
    p.kN *= scale;
    p.eps *= scale;
    p.M *= scale;
    return p;
}

void ModelParams::validate() const {
    const auto check = [](const char* name, double value) {
        if (!(value > 0.0) || !std::isfinite(value)) {
            throw InvalidParameter(std::string("parameter ") + name +
                                   " must be strictly positive and finite, got " +
                                   std::to_string(value));
        }
    };
    check("kB", kB);
    check("kE", kE);
    check("kD", kD);
    check("kN", kN);
    check("eps", eps);
    check("alpha", alpha);
    check("gamma", gamma);
    check("M", M);
}

double liquid_fraction(const PhaseState& u) { return 1.0 - (u.B + u.E + u.D); }

double liquid_velocity(const PhaseState& u) {
    const double L = interior_liquid_fraction(u);
    return (L - 1.0) / L * u.v;
}

ReactionVector reaction(const PhaseState& u, const ModelParams& p) {
    const double L = interior_liquid_fraction(u);
    ReactionVector g;
    g.gB = p.kB * u.B * L - p.kD * u.B;
    g.gE = p.kE * u.B * L - p.eps * u.E;
    g.gD = p.alpha * p.kD * u.B - p.kN * u.D;
    g.gv = (g.gL() - p.M) * u.v / (L * (1.0 - L));
    return g;
}

Vec4 flux(const PhaseState& u, const ModelParams& p) {
    const double L = interior_liquid_fraction(u);
    Vec4 f;
    f[0] = u.B * u.v;
    f[1] = u.E * u.v;
    f[2] = u.D * u.v;
    f[3] = (3.0 * L - 2.0) * u.v * u.v / (2.0 * L) +
           p.gamma * (L + std::log1p(-L));
    return f;
}

double eta(const PhaseState& u, const ModelParams& p) {
    const double L = interior_liquid_fraction(u);
    return L * p.gamma / (1.0 - L) - u.v * u.v / (L * L);
}

double delta(const PhaseState& u, const ModelParams& p) {
    const double L = interior_liquid_fraction(u);
    return L * p.gamma / (1.0 - L) - u.v * u.v / L;
}

Mat4 jacobian(const PhaseState& u, const ModelParams& p) {
    const double L = interior_liquid_fraction(u);
    const double e = eta(u, p);
    Mat4 a = Mat4::Zero();
    a(0, 0) = u.v;
    a(0, 3) = u.B;
    a(1, 1) = u.v;
    a(1, 3) = u.E;
    a(2, 2) = u.v;
    a(2, 3) = u.D;
    a(3, 0) = e;
    a(3, 1) = e;
    a(3, 2) = e;
    a(3, 3) = (3.0 * L - 2.0) * u.v / L;
    return a;
}

Mat4 symmetrizer(const PhaseState& u, const ModelParams& p) {
    interior_liquid_fraction(u);
    if (!(u.E > 0.0) || !(u.D > 0.0)) {
        throw DomainError("symmetrizer requires E > 0 and D > 0");
    }
    const double e = eta(u, p);
    if (!(e > 0.0)) {
        throw NotSymmetrizable("eta = " + std::to_string(e) +
                               " <= 0; state has no positive symmetrizer");
    }
    Mat4 a0 = Mat4::Zero();
    a0(0, 0) = e;
    a0(1, 1) = u.B * e / u.E;
    a0(2, 2) = u.B * e / u.D;
    a0(3, 3) = u.B;
    return a0;
}

std::array<double, 4> eigenvalues(const PhaseState& u, const ModelParams& p) {
    const double L = interior_liquid_fraction(u);
    const double d = delta(u, p);
    if (d < 0.0) {
        throw ComplexEigenvalues("Delta = " + std::to_string(d) +
                                 " < 0; characteristic speeds are complex");
    }
    const double c = std::sqrt((1.0 - L) * d);
    const double m = (2.0 * L - 1.0) * u.v / L;
    std::array<double, 4> lam = {u.v, u.v, m - c, m + c};
    std::sort(lam.begin(), lam.end());
    return lam;
}

double max_abs_eigenvalue(const PhaseState& u, const ModelParams& p) {
    const auto lam = eigenvalues(u, p);
    return std::max(std::abs(lam.front()), std::abs(lam.back()));
}

double hyperbolic_velocity_bound(double L, double gamma) {
    return std::pow(L, 1.5) * std::sqrt(gamma) / std::sqrt(1.0 - L);
}

bool in_hyperbolic_domain(const PhaseState& u, const ModelParams& p) {
    const double L = liquid_fraction(u);
    if (!(L > 0.0 && L < 1.0)) return false;
    return std::abs(u.v) < hyperbolic_velocity_bound(L, p.gamma);
}

}  // namespace biofilm
