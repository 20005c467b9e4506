#ifndef QCORR_CORRELATIONS_HPP
#define QCORR_CORRELATIONS_HPP

#include "qcorr/matrix.hpp"
#include "qcorr/xstate.hpp"

namespace qcorr {

/// Projective measurement basis on one qubit,
///   |1> = cos(theta)|0> + e^{i phi} sin(theta)|1>,
///   |2> = sin(theta)|0> - e^{i phi} cos(theta)|1>.
struct MeasurementAngles {
    double theta = 0.0; ///< radians, [0, pi)
    double phi = 0.0;   ///< radians, [0, 2 pi)

    /// Wraps arbitrary angles into the canonical ranges (both are periodic).
    static MeasurementAngles normalized(double theta, double phi);
};

enum class Branch { D1, D2 };

inline const char* to_string(Branch b) { return b == Branch::D1 ? "D1" : "D2"; }

/// Discord of an X state together with everything the analysis needs:
/// both critical-branch values, the winning branch, and the correlation split.
struct DiscordResult {
    double discord = 0.0;            ///< min(d1, d2), bits
    Branch branch = Branch::D1;      ///< arg min (ties resolve to D1)
    double d1 = 0.0;                 ///< computational-basis branch (theta = n pi/2)
    double d2 = 0.0;                 ///< theta = pi/4, phi = n pi/2 branch
    double classical_correlation = 0.0; ///< bits, at the winning branch
    double mutual_information = 0.0;    ///< bits
};

/// S(rho_A) + S(rho_B) - S(rho), bits. 4x4 states only.
double mutual_information(const DensityMatrix& rho);

/// sum_k p_k S(rho_k) after a projective measurement of `measured` in the
/// given basis; outcomes with p_k < 1e-14 contribute nothing.
double conditional_entropy_after_measurement(const DensityMatrix& rho,
                                             const MeasurementAngles& angles,
                                             Subsystem measured);

struct ClassicalCorrelation {
    double value = 0.0; ///< bits
    MeasurementAngles angles;
};

/// sup over measurement bases of S(rho_kept) - S(rho | {Pi_k}), located by a
/// 129 x 257 (theta, phi) grid followed by pattern-search refinement down to
/// an angle step of 1e-8. No gradients: the landscape has flat plateaus
/// (theta = n pi/2 makes the objective independent of phi).
ClassicalCorrelation classical_correlation_numeric(const DensityMatrix& rho, Subsystem measured);

/// Closed-form discord for an X state: evaluates both critical branches and
/// returns the minimum. All logarithms base 2; 0 log 0 = 0; vanishing
/// denominators (a+b = 0 or b+d = 0) drop the corresponding terms.
DiscordResult discord_x_analytic(const XState& x);

/// Mutual information minus the measurement-maximized classical correlation
/// (measurement on B). The optimizer path; independent of discord_x_analytic.
double discord_numeric(const DensityMatrix& rho);

/// Concurrence 2 max{0, z - sqrt(a d), w - b}, clamped to [0, 1].
double concurrence_x(const XState& x);

/// Entanglement of formation as a function of concurrence:
/// E = h((1 + sqrt(1 - C^2))/2) with h the binary entropy.
/// Throws std::domain_error outside 0 <= C <= 1.
double eof_from_concurrence(double concurrence);

} // namespace qcorr

#endif
