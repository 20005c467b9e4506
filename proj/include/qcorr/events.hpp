#ifndef QCORR_EVENTS_HPP
#define QCORR_EVENTS_HPP

#include <optional>
#include <span>
#include <vector>

#include "qcorr/trajectory.hpp"

namespace qcorr {

struct Interval {
    double t_start = 0.0;
    double t_end = 0.0;
};

struct EventTolerances {
    double discord_zero = 1e-6; ///< bits; looser than concurrence (tangential zeros)
    double concurrence = 1e-15; ///< separates clamped-zero stretches from grazing minima
    double birth_threshold = 1e-2; ///< bits
};

/// Isolated sub-tolerance minima of the discord series vs sustained
/// plateaus. Short dips (<= 3 samples) are isolated zeros; longer runs are
/// isolated only when the series descends strictly into the minimum and
/// climbs strictly out of it (3-sample windows) — tangential zeros pass,
/// flat stretches and unresolved tails land in zero_intervals.
struct DiscordZeroScan {
    std::vector<double> zero_times;
    std::vector<Interval> zero_intervals;
};

DiscordZeroScan find_discord_zeros(std::span<const TrajectoryRecord> series, double tol);

/// A reported sudden change: the branch label flips between two grid cells
/// while the discord stays continuous and its one-sided slopes jump.
struct BranchSwitch {
    double time = 0.0;         ///< midpoint of the flip cell
    double jump_bound = 0.0;   ///< smallest discontinuity consistent with the data
    double slope_change = 0.0; ///< |right slope - left slope|
    double noise = 0.0;        ///< local quotient-to-quotient variation
};

/// Branch-label flips filtered to genuine kinks: |jump_bound| <= 1e-4 and
/// slope_change > 5 x noise. Flips too close to the series ends to measure
/// slopes (2 cells) are not reportable.
std::vector<BranchSwitch> find_branch_switches(std::span<const TrajectoryRecord> series);

struct EsdScan {
    std::vector<Interval> intervals;     ///< maximal runs of C <= tol longer than 2 grid steps
    std::vector<double> revival_times;   ///< right endpoints of intervals that end inside the horizon
};

EsdScan find_esd_intervals(std::span<const TrajectoryRecord> series, double tol);

/// First time the discord exceeds the threshold, for runs that start below
/// it; nullopt when it never does or the precondition fails (initially
/// correlated run).
std::optional<double> detect_discord_birth(std::span<const TrajectoryRecord> series,
                                           double threshold);

struct EventReport {
    std::vector<double> discord_zero_times;
    std::vector<Interval> discord_zero_intervals;
    std::vector<double> branch_switch_times;
    std::vector<Interval> esd_intervals;
    std::vector<double> entanglement_revival_times;
    std::optional<double> discord_birth_time;
};

EventReport build_event_report(std::span<const TrajectoryRecord> series,
                               const EventTolerances& tol = {});

} // namespace qcorr

#endif
