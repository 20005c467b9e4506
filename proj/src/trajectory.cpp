#include "qcorr/trajectory.hpp"

#include <cmath>

namespace qcorr {

TrajectoryRecord make_record(double t, const XState& x) {
    TrajectoryRecord rec;
    rec.t = t;
    rec.x = x;
    const DiscordResult dr = discord_x_analytic(x);
    rec.mutual_info = dr.mutual_information;
    rec.classical_corr = dr.classical_correlation;
    rec.d1 = dr.d1;
    rec.d2 = dr.d2;
    rec.discord = dr.discord;
    rec.branch = dr.branch;
    rec.concurrence = concurrence_x(x);
    rec.eof = eof_from_concurrence(rec.concurrence);
    rec.purity = x.purity();
    return rec;
}

TrajectoryResult run_trajectory(Environment env, const BellLikeInitial& init,
                                const ReservoirParams& r, const IntegratorConfig& cfg) {
    TrajectoryResult out;
    if (env == Environment::common) {
        out.ladder_records = propagate_common(init, r, cfg);
        out.records.reserve(out.ladder_records.size());
        for (const auto& lr : out.ladder_records) out.records.push_back(make_record(lr.t, lr.x));
        return out;
    }
    init.validate();
    if (!(cfg.dt > 0.0) || !(cfg.t_max > 0.0) || cfg.record_every < 1)
        throw std::domain_error("run_trajectory: bad grid parameters");
    const long n_steps = std::lround(cfg.t_max / cfg.dt);
    out.records.reserve(static_cast<size_t>(n_steps / cfg.record_every) + 2);
    for (long k = 0; k <= n_steps; k += cfg.record_every) {
        const double t = static_cast<double>(k) * cfg.dt;
        out.records.push_back(make_record(t, propagate_independent(init, r, t)));
    }
    return out;
}

} // namespace qcorr
