#ifndef QCORR_IO_HPP
#define QCORR_IO_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcorr/events.hpp"
#include "qcorr/trajectory.hpp"

namespace qcorr {

enum class OutputFormat { csv, json };

/// Everything a run needs, in units of gamma0 (t in 1/gamma0, lambda as
/// lambda/gamma0); gamma0 itself is never a parameter.
struct RunConfig {
    Environment env = Environment::independent;
    double alpha2 = 0.5;
    double lambda_over_gamma0 = 0.01;
    double t_max_gamma0 = 50.0;
    double dt_gamma0 = 0.01;
    int record_every = 1;
    std::string output_path;
    OutputFormat format = OutputFormat::csv;
    bool events = false;

    void validate() const;
    ReservoirParams reservoir() const { return {1.0, lambda_over_gamma0}; }
    IntegratorConfig integrator() const { return {dt_gamma0, t_max_gamma0, record_every}; }
};

/// Fixed column order shared by the CSV and JSON writers.
const std::vector<std::string>& trajectory_columns();

/// 12-significant-digit decimal formatting used in every output file.
std::string format_number(double v);

std::string csv_line(const TrajectoryRecord& rec);

/// Writes the trajectory as CSV (header row mandatory). An event report, when
/// present, is appended as a single '#'-prefixed JSON footer line so the file
/// stays loadable by ordinary CSV readers.
void write_csv(const std::string& path, std::span<const TrajectoryRecord> records,
               const RunConfig& cfg, const EventReport* events);

/// Self-describing JSON: config echo, column names, row-major data, events.
void write_json(const std::string& path, std::span<const TrajectoryRecord> records,
                const RunConfig& cfg, const EventReport* events);

void write_output(const std::string& path, std::span<const TrajectoryRecord> records,
                  const RunConfig& cfg, const EventReport* events);

/// Reads a trajectory CSV produced by write_csv ('#' lines and header are
/// skipped). Used by the `events` subcommand to re-run detection offline.
std::vector<TrajectoryRecord> read_csv(const std::string& path);

std::string event_report_json(const EventReport& rep);

struct SweepEntry {
    double value = 0.0;
    std::string file;
};

void write_manifest(const std::string& path, const std::string& param,
                    const RunConfig& base, std::span<const SweepEntry> entries, int jobs);

} // namespace qcorr

#endif
