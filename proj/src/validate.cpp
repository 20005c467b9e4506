#include "qcorr/validate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qcorr/common_bath.hpp"
#include "qcorr/correlations.hpp"
#include "qcorr/independent.hpp"

namespace qcorr {

namespace {

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(3);
    ss << std::scientific << v;
    return ss.str();
}

} // namespace

SuiteResult suite_discord_oracle(const ValidationOptions& opts) {
    XStateSampler sampler(opts.seed);
    double worst = 0.0;
    for (int i = 0; i < opts.n_states; ++i) {
        const XState x = sampler.next();
        DiscordResult a = discord_x_analytic(x);
        double analytic = a.discord;
        if (opts.flip_d2_sign) analytic = std::min(a.d1, -a.d2);
        const double numeric = discord_numeric(x.to_density_matrix());
        worst = std::max(worst, std::abs(analytic - numeric));
    }
    return {"discord-analytic-vs-numeric", worst <= 1e-6,
            "max |analytic - numeric| = " + fmt(worst) + " over " +
                std::to_string(opts.n_states) + " random X states (tol 1e-6)"};
}

SuiteResult suite_pseudomode_calibration(const ValidationOptions& opts) {
    double worst = 0.0;
    for (double lam : {0.1, 1.0, 10.0}) {
        const ReservoirParams r{1.0, lam};
        const double dt = 0.25 * IntegratorConfig::max_dt(r);
        const auto series = single_qubit_q_series(r, dt, 50.0, opts.omega0_scale);
        for (size_t k = 0; k < series.size(); ++k) {
            const double t = static_cast<double>(k) * dt;
            worst = std::max(worst, std::abs(series[k] - amplitude_q(t, r)));
        }
    }
    return {"pseudomode-calibration", worst <= 1e-6,
            "max |q_pseudomode - q_closed_form| = " + fmt(worst) +
                " over [0, 50/gamma0], lambda/gamma0 in {0.1, 1, 10} (tol 1e-6)"};
}

SuiteResult suite_vanish_times() {
    const ReservoirParams r{1.0, 0.01};
    const auto times = vanish_times(r, 3);
    // independent root location: scan for sign changes, then bisect
    double worst_dt = 0.0, worst_p = 0.0;
    size_t found = 0;
    double prev_t = 0.0, prev_q = amplitude_q(0.0, r);
    for (double t = 0.01; t <= 120.0 && found < times.size(); t += 0.01) {
        const double q = amplitude_q(t, r);
        if (prev_q == 0.0 || q * prev_q < 0.0) {
            double lo = prev_t, hi = t;
            for (int it = 0; it < 100; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (amplitude_q(lo, r) * amplitude_q(mid, r) <= 0.0)
                    hi = mid;
                else
                    lo = mid;
            }
            const double root = 0.5 * (lo + hi);
            worst_dt = std::max(worst_dt, std::abs(root - times[found]));
            ++found;
        }
        prev_t = t;
        prev_q = q;
    }
    for (double tn : times) {
        const double q = amplitude_q(tn, r);
        worst_p = std::max(worst_p, q * q);
    }
    const bool pass = found == times.size() && worst_dt <= 1e-8 && worst_p <= 1e-12;
    return {"vanish-times", pass,
            "formula vs root-finding: max |dt| = " + fmt(worst_dt) +
                " (tol 1e-8), max P(t_n) = " + fmt(worst_p) + " (tol 1e-12)"};
}

SuiteResult suite_rk4_convergence() {
    const ReservoirParams r{1.0, 0.1};
    const BellLikeInitial init{1.0 / 3.0};
    const double dt = IntegratorConfig::max_dt(r);
    const auto coarse = propagate_common(init, r, {dt, 20.0, 1});
    const auto fine = propagate_common(init, r, {0.5 * dt, 20.0, 2});
    const size_t n = std::min(coarse.size(), fine.size());
    double worst = 0.0;
    for (size_t k = 0; k < n; ++k) {
        worst = std::max({worst, std::abs(coarse[k].x.a - fine[k].x.a),
                          std::abs(coarse[k].x.b - fine[k].x.b),
                          std::abs(coarse[k].x.d - fine[k].x.d),
                          std::abs(coarse[k].x.w - fine[k].x.w),
                          std::abs(coarse[k].x.z - fine[k].x.z)});
    }
    return {"rk4-convergence", worst <= 1e-8,
            "max record change under dt halving = " + fmt(worst) + " (tol 1e-8)"};
}

std::vector<SuiteResult> run_validation(const ValidationOptions& opts) {
    return {suite_discord_oracle(opts), suite_pseudomode_calibration(opts), suite_vanish_times(),
            suite_rk4_convergence()};
}

} // namespace qcorr
