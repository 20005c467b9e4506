#ifndef QCORR_INDEPENDENT_HPP
#define QCORR_INDEPENDENT_HPP

#include <vector>

#include "qcorr/reservoir.hpp"
#include "qcorr/xstate.hpp"

namespace qcorr {

/// Excited-state decay amplitude q(t) for a single qubit in a Lorentzian
/// reservoir, q(0) = 1, |q| <= 1. Strong coupling:
///   q = e^{-lambda t/2} [cos(d t/2) + (lambda/d) sin(d t/2)],
///   d = sqrt(2 gamma0 lambda - lambda^2);
/// weak coupling uses the hyperbolic counterpart. Solves
/// q'' + lambda q' + (gamma0 lambda / 2) q = 0 with q(0)=1, q'(0)=0.
double amplitude_q(double t, const ReservoirParams& r);

/// Closed-form two-qubit X state at time t for independent, identical
/// reservoirs. With kappa = 1 - alpha^2 and P = q(t)^2:
///   a = alpha^2 + kappa (1-P)^2,  b = kappa P (1-P),  d = kappa P^2,
///   w = alpha sqrt(kappa) P,      z = 0.
XState propagate_independent(const BellLikeInitial& init, const ReservoirParams& r, double t);

/// The discrete times t_n = 2[n pi - arctan(d/lambda)]/d, n = 1..n_max, at
/// which q vanishes. Strong coupling only (q has no repeated zeros otherwise).
std::vector<double> vanish_times(const ReservoirParams& r, int n_max);

} // namespace qcorr

#endif
