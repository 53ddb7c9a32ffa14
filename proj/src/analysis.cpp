#include "biofilm/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace biofilm {

namespace {

double sq(double x) { return x * x; }

double sq_norm(const Vec4& w) { return w.squaredNorm(); }

}  // namespace

Norms discrete_norms(const FieldState& field, const EquilibriumPoint& ubar,
                     double dx, BoundaryType bc) {
    const int n = static_cast<int>(field.cells.size());
    if (n < 5) {
        throw GridTooSmall("discrete norms need at least 5 cells, got " +
                           std::to_string(n));
    }

    const Vec4 ueq = ubar.as_state().to_vector();
    std::vector<Vec4> w(n);
    for (int i = 0; i < n; ++i) w[i] = field.cells[i].to_vector() - ueq;

    double s0 = 0.0, s1 = 0.0, s2 = 0.0;
    for (int i = 0; i < n; ++i) {
        s0 += sq_norm(w[i]);

        Vec4 wx, wxx;
        if (bc == BoundaryType::Periodic) {
            const Vec4& wm = w[(i - 1 + n) % n];
            const Vec4& wp = w[(i + 1) % n];
            wx = (wp - wm) / (2.0 * dx);
            wxx = (wp - 2.0 * w[i] + wm) / (dx * dx);
        } else if (i == 0) {
            wx = (w[1] - w[0]) / dx;
            wxx = (w[0] - 2.0 * w[1] + w[2]) / (dx * dx);
        } else if (i == n - 1) {
            wx = (w[n - 1] - w[n - 2]) / dx;
            wxx = (w[n - 1] - 2.0 * w[n - 2] + w[n - 3]) / (dx * dx);
        } else {
            wx = (w[i + 1] - w[i - 1]) / (2.0 * dx);
            wxx = (w[i + 1] - 2.0 * w[i] + w[i - 1]) / (dx * dx);
        }
        s1 += sq_norm(wx);
        s2 += sq_norm(wxx);
    }

    Norms out;
    out.l2 = std::sqrt(s0 * dx);
    out.h1 = std::sqrt((s0 + s1) * dx);
    out.h2 = std::sqrt((s0 + s1 + s2) * dx);
    return out;
}

double functional_N(const NormTrace& trace, int l, double t) {
    if (l < 0 || l > 2) {
        throw InvalidParameter("norm order l must be 0, 1 or 2, got " +
                               std::to_string(l));
    }
    if (trace.samples.empty()) {
        throw OutOfRange("functional over an empty trace");
    }
    const double t0 = trace.samples.front().t;
    const double t1 = trace.samples.back().t;
    const double slack = 1e-12 * std::max(1.0, std::abs(t1));
    if (t < t0 - slack || t > t1 + slack) {
        throw OutOfRange("time " + std::to_string(t) + " outside trace [" +
                         std::to_string(t0) + ", " + std::to_string(t1) + "]");
    }

    const auto norm_of = [l](const NormSample& s) {
        return l == 0 ? s.l2 : (l == 1 ? s.h1 : s.h2);
    };

    double sup_sq = 0.0;
    double integral = 0.0;
    double prev_t = t0;
    double prev_sq = sq(norm_of(trace.samples.front()));
    sup_sq = prev_sq;
    for (size_t i = 1; i < trace.samples.size(); ++i) {
        if (trace.samples[i].t > t + slack) break;
        const double cur_sq = sq(norm_of(trace.samples[i]));
        integral += 0.5 * (prev_sq + cur_sq) * (trace.samples[i].t - prev_t);
        sup_sq = std::max(sup_sq, cur_sq);
        prev_t = trace.samples[i].t;
        prev_sq = cur_sq;
    }
    return std::sqrt(sup_sq + integral);
}

DecayFit fit_decay(const NormTrace& trace, double t_start, double t_end) {
    const double slack = 1e-12 * std::max(1.0, std::abs(t_end));

    std::vector<const NormSample*> window;
    for (const NormSample& s : trace.samples) {
        if (s.t >= t_start - slack && s.t <= t_end + slack) window.push_back(&s);
    }
    if (window.empty()) {
        throw InsufficientData("fit window contains no samples");
    }

    // A nonpositive h2 makes ln h2 undefined; shrink the window to the
    // leading positive run and report the window actually used.
    size_t usable = 0;
    while (usable < window.size() && window[usable]->h2 > 0.0) ++usable;
    if (usable < 10) {
        throw InsufficientData("fit window has " + std::to_string(usable) +
                               " samples with h2 > 0; need at least 10");
    }
    window.resize(usable);

    const size_t m = window.size();
    double mean_t = 0.0, mean_y = 0.0;
    for (const NormSample* s : window) {
        mean_t += s->t;
        mean_y += std::log(s->h2);
    }
    mean_t /= m;
    mean_y /= m;

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const NormSample* s : window) {
        const double dt = s->t - mean_t;
        const double dy = std::log(s->h2) - mean_y;
        sxx += dt * dt;
        sxy += dt * dy;
        syy += dy * dy;
    }
    const double slope = sxy / sxx;
    const double intercept = mean_y - slope * mean_t;

    double ss_res = 0.0;
    for (const NormSample* s : window) {
        ss_res += sq(std::log(s->h2) - (intercept + slope * s->t));
    }

    const double h2_initial = trace.samples.front().h2;
    if (!(h2_initial > 0.0)) {
        throw NonPositiveNorm("trace starts with h2 = " +
                              std::to_string(h2_initial) +
                              "; cannot normalize the prefactor");
    }

    DecayFit fit;
    fit.beta = -slope;
    fit.C1 = std::exp(intercept) / h2_initial;
    fit.r_squared = syy > 0.0 ? std::max(0.0, 1.0 - ss_res / syy)
                              : (ss_res == 0.0 ? 1.0 : 0.0);
    fit.window_start = window.front()->t;
    fit.window_end = window.back()->t;
    fit.samples_used = m;
    return fit;
}

}  // namespace biofilm
