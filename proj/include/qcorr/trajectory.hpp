#ifndef QCORR_TRAJECTORY_HPP
#define QCORR_TRAJECTORY_HPP

#include <vector>

#include "qcorr/common_bath.hpp"
#include "qcorr/correlations.hpp"
#include "qcorr/independent.hpp"

namespace qcorr {

/// One row of a simulated trajectory: the state parameters plus every
/// correlation measure the figures track.
struct TrajectoryRecord {
    double t = 0.0;
    XState x;
    double mutual_info = 0.0;
    double classical_corr = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
    double discord = 0.0;
    Branch branch = Branch::D1;
    double concurrence = 0.0;
    double eof = 0.0;
    double purity = 0.0;
};

TrajectoryRecord make_record(double t, const XState& x);

enum class Environment { independent, common };

inline const char* to_string(Environment e) {
    return e == Environment::independent ? "independent" : "common";
}

struct TrajectoryResult {
    std::vector<TrajectoryRecord> records;
    /// Integrator diagnostics; empty for the closed-form independent engine.
    std::vector<LadderRecord> ladder_records;
};

/// Runs either engine on the uniform record grid t = k * dt * record_every.
TrajectoryResult run_trajectory(Environment env, const BellLikeInitial& init,
                                const ReservoirParams& r, const IntegratorConfig& cfg);

} // namespace qcorr

#endif
