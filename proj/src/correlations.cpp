#include "qcorr/correlations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcorr {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kThetaGrid = 129;
constexpr int kPhiGrid = 257;
constexpr double kAngleResolution = 1e-8;
constexpr double kOutcomeCutoff = 1e-14;

using Ket = std::array<complexd, 2>;

// Entropy in bits of the normalized post-measurement state p^-1 M, where M is
// the (unnormalized) 2x2 conditional operator with trace p.
double conditional_term(const ComplexMatrix& rho, const Ket& k, Subsystem measured) {
    // M_ij = sum_{r,s} conj(k_r) k_s rho[idx(i,r)][idx(j,s)], idx per A-major order
    complexd m00 = 0.0, m01 = 0.0, m11 = 0.0;
    for (int r = 0; r < 2; ++r) {
        for (int s = 0; s < 2; ++s) {
            const complexd c = std::conj(k[r]) * k[s];
            if (measured == Subsystem::B) {
                m00 += c * rho(0 + r, 0 + s);
                m01 += c * rho(0 + r, 2 + s);
                m11 += c * rho(2 + r, 2 + s);
            } else {
                m00 += c * rho(2 * r + 0, 2 * s + 0);
                m01 += c * rho(2 * r + 0, 2 * s + 1);
                m11 += c * rho(2 * r + 1, 2 * s + 1);
            }
        }
    }
    const double p = m00.real() + m11.real();
    if (p < kOutcomeCutoff) return 0.0;
    double lo, hi;
    detail::eig2x2(m00.real() / p, m01 / p, m11.real() / p, lo, hi);
    return p * (-xlog2(std::clamp(lo, 0.0, 1.0)) - xlog2(std::clamp(hi, 0.0, 1.0)));
}

} // namespace

MeasurementAngles MeasurementAngles::normalized(double theta, double phi) {
    auto wrap = [](double x, double period) {
        double r = std::fmod(x, period);
        if (r < 0.0) r += period;
        return r;
    };
    return {wrap(theta, kPi), wrap(phi, 2.0 * kPi)};
}

double mutual_information(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw dimension_error("mutual_information: expected a 4x4 state");
    const double sa = vn_entropy(partial_trace(rho, Subsystem::B));
    const double sb = vn_entropy(partial_trace(rho, Subsystem::A));
    return sa + sb - vn_entropy(rho);
}

double conditional_entropy_after_measurement(const DensityMatrix& rho,
                                             const MeasurementAngles& angles,
                                             Subsystem measured) {
    if (rho.dim() != 4)
        throw dimension_error("conditional_entropy_after_measurement: expected a 4x4 state");
    const double ct = std::cos(angles.theta);
    const double st = std::sin(angles.theta);
    const complexd eip = std::polar(1.0, angles.phi);
    const Ket k1{complexd(ct), eip * st};
    const Ket k2{complexd(st), -eip * ct};
    return conditional_term(rho.matrix(), k1, measured) +
           conditional_term(rho.matrix(), k2, measured);
}

ClassicalCorrelation classical_correlation_numeric(const DensityMatrix& rho, Subsystem measured) {
    if (rho.dim() != 4)
        throw dimension_error("classical_correlation_numeric: expected a 4x4 state");
    const ComplexMatrix& m = rho.matrix();

    auto objective = [&](double theta, double phi) {
        const double ct = std::cos(theta);
        const double st = std::sin(theta);
        const complexd eip = std::polar(1.0, phi);
        return conditional_term(m, Ket{complexd(ct), eip * st}, measured) +
               conditional_term(m, Ket{complexd(st), -eip * ct}, measured);
    };

    double best_f = 0.0, best_theta = 0.0, best_phi = 0.0;
    bool first = true;
    for (int i = 0; i < kThetaGrid; ++i) {
        const double theta = kPi * i / kThetaGrid;
        for (int j = 0; j < kPhiGrid; ++j) {
            const double phi = 2.0 * kPi * j / kPhiGrid;
            const double f = objective(theta, phi);
            if (first || f < best_f) {
                best_f = f;
                best_theta = theta;
                best_phi = phi;
                first = false;
            }
        }
    }

    // compass pattern search with step halving
    double step = kPi / kThetaGrid;
    int guard = 0;
    while (step > kAngleResolution && ++guard < 20000) {
        bool moved = false;
        const double cand[4][2] = {{best_theta + step, best_phi},
                                   {best_theta - step, best_phi},
                                   {best_theta, best_phi + step},
                                   {best_theta, best_phi - step}};
        for (const auto& c : cand) {
            const double f = objective(c[0], c[1]);
            if (f < best_f) {
                best_f = f;
                best_theta = c[0];
                best_phi = c[1];
                moved = true;
                break;
            }
        }
        if (!moved) step *= 0.5;
    }

    // tracing out the measured side leaves the subsystem the conditional states live on
    const double s_kept = vn_entropy(partial_trace(rho, measured));
    ClassicalCorrelation out;
    out.value = s_kept - best_f;
    out.angles = MeasurementAngles::normalized(best_theta, best_phi);
    return out;
}

DiscordResult discord_x_analytic(const XState& x) {
    x.validate();

    const double s_a = x.marginal_entropy();
    const double s_ab = x.entropy();

    // theta = n pi/2 branch: measurement in the computational basis.
    // Terms -p log2(p / denom) vanish when either p or denom vanishes.
    auto term = [](double p, double denom) {
        return (p > 0.0 && denom > 0.0) ? -p * std::log2(p / denom) : 0.0;
    };
    const double f1 = term(x.a, x.a + x.b) + term(x.b, x.a + x.b) +
                      term(x.d, x.b + x.d) + term(x.b, x.b + x.d);
    const double d1 = s_a - s_ab + f1;

    // theta = pi/4, phi = n pi/2 branch
    const double gamma2 = (x.a - x.d) * (x.a - x.d) +
                          4.0 * (std::abs(x.z) + std::abs(x.w)) * (std::abs(x.z) + std::abs(x.w));
    const double gamma = std::min(std::sqrt(std::max(gamma2, 0.0)), 1.0);
    const double f2 = binary_entropy(0.5 * (1.0 + gamma));
    const double d2 = s_a - s_ab + f2;

    DiscordResult r;
    r.d1 = d1;
    r.d2 = d2;
    r.branch = (d1 <= d2) ? Branch::D1 : Branch::D2;
    r.discord = std::min(d1, d2);
    r.classical_correlation = s_a - (r.branch == Branch::D1 ? f1 : f2);
    r.mutual_information = 2.0 * s_a - s_ab;
    return r;
}

double discord_numeric(const DensityMatrix& rho) {
    return mutual_information(rho) - classical_correlation_numeric(rho, Subsystem::B).value;
}

double concurrence_x(const XState& x) {
    x.validate();
    const double lambda1 = x.z - std::sqrt(std::max(x.a * x.d, 0.0));
    const double lambda2 = x.w - x.b;
    const double c = 2.0 * std::max({0.0, lambda1, lambda2});
    return std::clamp(c, 0.0, 1.0);
}

double eof_from_concurrence(double concurrence) {
    if (!(concurrence >= 0.0 && concurrence <= 1.0))
        throw std::domain_error("eof_from_concurrence: concurrence outside [0, 1]");
    const double g = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - concurrence * concurrence)));
    return binary_entropy(g);
}

} // namespace qcorr
