#include "biofilm/dissipativity.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "biofilm/model.hpp"

namespace biofilm {

EquilibriumPoint equilibrium(const ModelParams& p) {
    if (!(p.kB > p.kD)) {
        throw NoPositiveEquilibrium(
            "positive equilibrium requires bacteria growth rate kB > death rate kD (kB = " +
            std::to_string(p.kB) + ", kD = " + std::to_string(p.kD) + ")");
    }
    EquilibriumPoint eq;
    eq.B = (1.0 - p.kD / p.kB) /
           (1.0 + p.alpha * p.kD / p.kN + p.kD * p.kE / (p.eps * p.kB));
    eq.E = eq.B * p.kE * p.kD / (p.eps * p.kB);
    eq.D = eq.B * p.alpha * p.kD / p.kN;
    eq.v = 0.0;
    eq.L = 1.0 - (eq.B + eq.E + eq.D);
    return eq;
}

Mat4 dissipation_matrix(const PhaseState& u, const EquilibriumPoint& ubar,
                        const ModelParams& p) {
    const double L = liquid_fraction(u);
    if (!(L > 0.0 && L < 1.0)) {
        throw DomainError("dissipation matrix needs 0 < L < 1, got L = " +
                          std::to_string(L));
    }
    const double gL = reaction(u, p).gL();

    Mat4 d = Mat4::Zero();
    d(0, 0) = d(0, 1) = d(0, 2) = -u.B * p.kB;
    d(1, 0) = p.kE * (L - ubar.B);
    d(1, 1) = -(p.eps + p.kE * ubar.B);
    d(1, 2) = -p.kE * ubar.B;
    d(2, 0) = p.kN * u.D / ubar.B;
    d(2, 2) = -p.kN * u.B / ubar.B;
    d(3, 3) = (gL - p.M) / (L * (1.0 - L));
    return d;
}

Mat4 symmetrized_A0D(const ModelParams& p) {
    const EquilibriumPoint eq = equilibrium(p);
    const Mat4 a0 = symmetrizer(eq.as_state(), p);
    const Mat4 d = dissipation_matrix(eq.as_state(), eq, p);
    const Mat4 prod = a0 * d;
    return 0.5 * (prod + prod.transpose());
}

RhCoefficients rh_coefficients(const ModelParams& p) {
    const Mat4 s = symmetrized_A0D(p);
    // The 3x3 biological block carries the common positive factor
    // gamma/(kB - kD) through the symmetrizer; divide it out so the
    // coefficients come in pure rate units (rate^2, rate^4, rate^6).
    const double scale = p.gamma / (p.kB - p.kD);
    const Eigen::Matrix3d blk = s.topLeftCorner<3, 3>() / scale;

    RhCoefficients c;
    c.a1 = -blk.trace();
    c.a2 = (blk(0, 0) * blk(1, 1) - blk(0, 1) * blk(1, 0)) +
           (blk(0, 0) * blk(2, 2) - blk(0, 2) * blk(2, 0)) +
           (blk(1, 1) * blk(2, 2) - blk(1, 2) * blk(2, 1));
    c.a3 = -blk.determinant();
    return c;
}

std::array<bool, 3> rh_check(double a1, double a2, double a3) {
    return {a1 > 0.0, a3 > 0.0, a1 * a2 - a3 > 0.0};
}

DissipativityReport is_totally_dissipative(const ModelParams& p) {
    DissipativityReport rep;
    rep.coeffs = rh_coefficients(p);
    const auto rh = rh_check(rep.coeffs.a1, rep.coeffs.a2, rep.coeffs.a3);
    rep.rh1 = rh[0];
    rep.rh2 = rh[1];
    rep.rh3 = rh[2];

    const Mat4 s = symmetrized_A0D(p);
    rep.block44 = s(3, 3);
    rep.block44_negative = rep.block44 < 0.0;
    rep.verdict = rep.rh1 && rep.rh2 && rep.rh3 && rep.block44_negative;

    // Independent route: definiteness from the spectrum of the symmetric
    // part, with a threshold band around zero reported as marginal (and
    // counted as not definite).
    Eigen::SelfAdjointEigenSolver<Mat4> es(s, Eigen::EigenvaluesOnly);
    rep.max_sym_eigenvalue = es.eigenvalues().maxCoeff();
    const double band = 1e-14 * s.cwiseAbs().maxCoeff();
    rep.eig_negative_definite = rep.max_sym_eigenvalue < -band;
    rep.eig_marginal = std::abs(rep.max_sym_eigenvalue) <= band;
    return rep;
}

RhCoefficients closed_form_rh_coefficients(const ModelParams& p) {
    const double kB = p.kB, kE = p.kE, kD = p.kD, kN = p.kN, eps = p.eps,
                 alpha = p.alpha;
    const double Bb = equilibrium(p).B;

    RhCoefficients c;
    c.a1 = Bb * kB * kD + eps * eps * kB / kE + eps * Bb + kN * kN / alpha;
    c.a2 = eps * eps * Bb * kB * kB * kD / kE + eps * Bb * kB * kN * kN / alpha +
           eps * kB * kD * kN * kN / alpha +
           Bb * kB * kD * (eps * Bb * kB + eps * kD + kD * kN + eps * eps) / 2.0 -
           Bb * Bb * kB * kB * (kD * kD + eps * eps) / 2.0 -
           kD * kD * (kN * kN + eps * eps) / 4.0;
    c.a3 = eps * eps * Bb * kB * kB * kD * kD * kN / (2.0 * kE) +
           eps * eps * Bb * kB * kB * kD * kN * kN / (alpha * kE) +
           eps * Bb * kB * kD * kN * kN * (Bb * kB + eps + kD) / (2.0 * alpha) +
           eps * Bb * kB * kD * kD * kN * (eps + Bb * kB) / 4.0 -
           eps * Bb * kB * kD *
               (eps * Bb * kB * kN + eps * Bb * kB * kD + kD * kN * kN) / 4.0 -
           eps * eps * kB * kD * kD * (kN * kN + Bb * Bb * kB * kB) / (4.0 * kE) -
           kN * kN *
               (eps * eps * kD * kD + eps * eps * Bb * Bb * kB * kB +
                Bb * Bb * kB * kB * kD * kD) /
               (4.0 * alpha);
    return c;
}

CoefficientCrossCheck coefficient_crosscheck(const ModelParams& p) {
    CoefficientCrossCheck cc;
    cc.numeric = rh_coefficients(p);
    cc.closed_form = closed_form_rh_coefficients(p);
    const auto rel = [](double a, double b) {
        const double denom = std::max(std::abs(a), std::abs(b));
        return denom > 0.0 ? std::abs(a - b) / denom : 0.0;
    };
    cc.relative_difference = {rel(cc.numeric.a1, cc.closed_form.a1),
                              rel(cc.numeric.a2, cc.closed_form.a2),
                              rel(cc.numeric.a3, cc.closed_form.a3)};
    return cc;
}

ModelParams param_family(double a, double gamma, double M) {
    if (!(a > 0.0)) {
        throw InvalidParameter("family parameter a must be > 0, got " +
                               std::to_string(a));
    }
    ModelParams p;
    p.eps = 1.25e-7;
    p.kN = 10.0 * a * p.eps;
    p.kE = 100.0 * a * p.eps;
    p.kD = 2.0 * a * p.eps;
    p.kB = 70.0 * a * p.eps;
    p.alpha = 0.25;
    p.gamma = gamma;
    p.M = M;
    return p;
}

SweepResult sweep(double a_min, double a_max, double step, double gamma,
                  double M) {
    if (!(a_min > 0.0) || !(a_max >= a_min) || !(step > 0.0)) {
        throw InvalidParameter("sweep needs 0 < a_min <= a_max and step > 0");
    }

    const auto verdict_at = [&](double a) {
        return is_totally_dissipative(param_family(a, gamma, M)).verdict;
    };

    SweepResult result;
    const int n = static_cast<int>(std::floor((a_max - a_min) / step + 1e-9));
    result.rows.reserve(n + 1);
    for (int i = 0; i <= n; ++i) {
        const double a = a_min + i * step;
        const DissipativityReport rep = is_totally_dissipative(param_family(a, gamma, M));
        result.rows.push_back({a, rep.coeffs, rep.rh1, rep.rh2, rep.rh3, rep.verdict});
    }

    for (size_t i = 0; i + 1 < result.rows.size(); ++i) {
        if (result.rows[i].verdict == result.rows[i + 1].verdict) continue;
        double lo = result.rows[i].a;
        double hi = result.rows[i + 1].a;
        const bool lo_verdict = result.rows[i].verdict;
        while (hi - lo > 1e-4) {
            const double mid = 0.5 * (lo + hi);
            if (verdict_at(mid) == lo_verdict) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        result.transitions.push_back(0.5 * (lo + hi));
    }
    return result;
}

}  // namespace biofilm
