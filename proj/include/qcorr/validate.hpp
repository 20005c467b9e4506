#ifndef QCORR_VALIDATE_HPP
#define QCORR_VALIDATE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qcorr {

/// Knobs for the self-validation suites. The perturbation hooks exist only to
/// prove the suites can fail: they bend the quantity under test, never the
/// library itself.
struct ValidationOptions {
    std::uint64_t seed = 20260810ull;
    int n_states = 500;
    double omega0_scale = 1.0; ///< multiplies the calibration coupling
    bool flip_d2_sign = false; ///< negates the D2 branch inside the oracle comparison
};

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Closed-form discord vs the measurement optimizer on random X states.
SuiteResult suite_discord_oracle(const ValidationOptions& opts);
/// Single-qubit pseudomode reduction vs the closed-form amplitude q(t).
SuiteResult suite_pseudomode_calibration(const ValidationOptions& opts);
/// vanish_times formula vs direct root-finding on q.
SuiteResult suite_vanish_times();
/// Step-halving convergence of the common-bath integrator.
SuiteResult suite_rk4_convergence();

std::vector<SuiteResult> run_validation(const ValidationOptions& opts);

} // namespace qcorr

#endif
