#include "qcorr/independent.hpp"

#include <cmath>
#include <numbers>

namespace qcorr {

double amplitude_q(double t, const ReservoirParams& r) {
    r.validate();
    if (t < 0.0) throw std::domain_error("amplitude_q: negative time");
    const double lam = r.lambda;
    const double envelope = std::exp(-0.5 * lam * t);
    const double disc = 2.0 * r.gamma0 * lam - lam * lam;
    // |disc| ~ 0 is the critically damped crossover between the regimes
    if (std::abs(disc) < 1e-12 * lam * lam)
        return envelope * (1.0 + 0.5 * lam * t);
    if (disc > 0.0) {
        const double d = std::sqrt(disc);
        return envelope * (std::cos(0.5 * d * t) + (lam / d) * std::sin(0.5 * d * t));
    }
    const double dt = std::sqrt(-disc);
    return envelope * (std::cosh(0.5 * dt * t) + (lam / dt) * std::sinh(0.5 * dt * t));
}

XState propagate_independent(const BellLikeInitial& init, const ReservoirParams& r, double t) {
    init.validate();
    const double q = amplitude_q(t, r);
    const double p = q * q;
    const double kappa = 1.0 - init.alpha2;
    XState x;
    x.a = init.alpha2 + kappa * (1.0 - p) * (1.0 - p);
    x.b = kappa * p * (1.0 - p);
    x.d = kappa * p * p;
    x.w = std::sqrt(init.alpha2 * kappa) * p;
    x.z = 0.0;
    return x;
}

std::vector<double> vanish_times(const ReservoirParams& r, int n_max) {
    r.validate();
    if (r.regime() != CouplingRegime::strong)
        throw unsupported_regime_error(
            "vanish_times: q(t) has no periodic zeros outside the strong-coupling regime");
    if (n_max < 1) throw std::domain_error("vanish_times: n_max must be >= 1");
    const double d = std::sqrt(2.0 * r.gamma0 * r.lambda - r.lambda * r.lambda);
    const double offset = std::atan(d / r.lambda);
    std::vector<double> times;
    times.reserve(static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n)
        times.push_back(2.0 * (n * std::numbers::pi - offset) / d);
    return times;
}

} // namespace qcorr
