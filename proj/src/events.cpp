#include "qcorr/events.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcorr {

namespace {

constexpr double kJumpTol = 1e-4;
constexpr double kSlopeNoiseFactor = 5.0;
constexpr size_t kVWindow = 3;
constexpr size_t kNoiseWindow = 6;

bool strictly_decreasing(std::span<const TrajectoryRecord> s, size_t from, size_t to) {
    for (size_t i = from; i < to; ++i)
        if (!(s[i].discord > s[i + 1].discord)) return false;
    return true;
}

bool strictly_increasing(std::span<const TrajectoryRecord> s, size_t from, size_t to) {
    for (size_t i = from; i < to; ++i)
        if (!(s[i].discord < s[i + 1].discord)) return false;
    return true;
}

} // namespace

DiscordZeroScan find_discord_zeros(std::span<const TrajectoryRecord> series, double tol) {
    if (series.empty()) throw std::domain_error("find_discord_zeros: empty series");
    DiscordZeroScan scan;
    const size_t n = series.size();
    size_t i = 0;
    while (i < n) {
        if (series[i].discord > tol) {
            ++i;
            continue;
        }
        size_t i0 = i;
        while (i + 1 < n && series[i + 1].discord <= tol) ++i;
        const size_t i1 = i;
        ++i;

        size_t m = i0;
        for (size_t k = i0; k <= i1; ++k)
            if (series[k].discord < series[m].discord) m = k;

        bool isolated;
        if (i1 - i0 + 1 <= 3) {
            isolated = true;
        } else {
            // V-shape around the minimum: tangential zeros descend/ascend
            // strictly; flat plateaus and trailing decays do not.
            const size_t lfrom = (m >= kVWindow) ? std::max(i0, m - kVWindow) : i0;
            const bool left_ok = (m == i0) ? true : strictly_decreasing(series, lfrom, m);
            const bool right_ok =
                (m == i1) ? (i1 + 1 < n) : strictly_increasing(series, m, std::min(i1, m + kVWindow));
            isolated = left_ok && right_ok;
        }
        if (isolated)
            scan.zero_times.push_back(series[m].t);
        else
            scan.zero_intervals.push_back({series[i0].t, series[i1].t});
    }
    return scan;
}

std::vector<BranchSwitch> find_branch_switches(std::span<const TrajectoryRecord> series) {
    std::vector<BranchSwitch> out;
    const size_t n = series.size();
    if (n < 4) return out;
    for (size_t i = 1; i + 2 < n; ++i) {
        if (series[i].branch == series[i + 1].branch) continue;
        const double h = series[i + 1].t - series[i].t;
        if (!(h > 0.0)) continue;
        const double slope_left = (series[i].discord - series[i - 1].discord) / h;
        const double slope_right = (series[i + 2].discord - series[i + 1].discord) / h;
        const double delta = series[i + 1].discord - series[i].discord;

        // Smallest discontinuity consistent with a kink somewhere inside the
        // cell: a continuous kink makes these two residuals bracket zero.
        const double j0 = delta - slope_right * h;
        const double j1 = delta - slope_left * h;
        const double jump = (j0 * j1 > 0.0) ? std::min(std::abs(j0), std::abs(j1)) : 0.0;

        double noise = 0.0;
        int samples = 0;
        auto quotient = [&](size_t k) { return (series[k + 1].discord - series[k].discord) / h; };
        for (size_t k = (i >= kNoiseWindow + 2 ? i - (kNoiseWindow + 2) : 0); k + 2 <= i; ++k) {
            noise = std::max(noise, std::abs(quotient(k + 1) - quotient(k)));
            ++samples;
        }
        for (size_t k = i + 1; k + 2 < n && k + 2 <= i + 1 + kNoiseWindow; ++k) {
            noise = std::max(noise, std::abs(quotient(k + 1) - quotient(k)));
            ++samples;
        }
        if (samples < 2) continue;

        const double slope_change = std::abs(slope_right - slope_left);
        if (jump <= kJumpTol && slope_change > kSlopeNoiseFactor * noise)
            out.push_back({0.5 * (series[i].t + series[i + 1].t), jump, slope_change, noise});
    }
    return out;
}

EsdScan find_esd_intervals(std::span<const TrajectoryRecord> series, double tol) {
    EsdScan scan;
    const size_t n = series.size();
    if (n < 2) return scan;
    const double h = series[1].t - series[0].t;
    size_t i = 0;
    while (i < n) {
        if (series[i].concurrence > tol) {
            ++i;
            continue;
        }
        const size_t i0 = i;
        while (i + 1 < n && series[i + 1].concurrence <= tol) ++i;
        const size_t i1 = i;
        ++i;
        if (series[i1].t - series[i0].t > 2.0 * h) {
            scan.intervals.push_back({series[i0].t, series[i1].t});
            if (i1 + 1 < n) scan.revival_times.push_back(series[i1].t);
        }
    }
    return scan;
}

std::optional<double> detect_discord_birth(std::span<const TrajectoryRecord> series,
                                           double threshold) {
    if (series.empty() || series.front().discord >= threshold) return std::nullopt;
    for (const auto& rec : series)
        if (rec.discord > threshold) return rec.t;
    return std::nullopt;
}

EventReport build_event_report(std::span<const TrajectoryRecord> series,
                               const EventTolerances& tol) {
    EventReport rep;
    auto zeros = find_discord_zeros(series, tol.discord_zero);
    rep.discord_zero_times = std::move(zeros.zero_times);
    rep.discord_zero_intervals = std::move(zeros.zero_intervals);
    for (const auto& sw : find_branch_switches(series)) rep.branch_switch_times.push_back(sw.time);
    auto esd = find_esd_intervals(series, tol.concurrence);
    rep.esd_intervals = std::move(esd.intervals);
    rep.entanglement_revival_times = std::move(esd.revival_times);
    rep.discord_birth_time = detect_discord_birth(series, tol.birth_threshold);
    return rep;
}

} // namespace qcorr
