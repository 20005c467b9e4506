#include "qcorr/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qcorr {

using nlohmann::json;

void RunConfig::validate() const {
    if (!(alpha2 >= 0.0 && alpha2 <= 1.0))
        throw std::domain_error("config: alpha2 outside [0, 1]");
    if (!(lambda_over_gamma0 > 0.0))
        throw std::domain_error("config: lambda must be positive");
    if (!(t_max_gamma0 > 0.0) || !(dt_gamma0 > 0.0))
        throw std::domain_error("config: t_max and dt must be positive");
    if (record_every < 1) throw std::domain_error("config: record_every must be >= 1");
    if (env == Environment::common) integrator().validate(reservoir());
}

const std::vector<std::string>& trajectory_columns() {
    static const std::vector<std::string> cols = {
        "t", "a", "b", "d", "w", "z", "mutual_info", "classical_corr",
        "d1", "d2", "discord", "branch", "concurrence", "eof", "purity"};
    return cols;
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string csv_line(const TrajectoryRecord& r) {
    std::string line;
    line.reserve(220);
    for (double v : {r.t, r.x.a, r.x.b, r.x.d, r.x.w, r.x.z, r.mutual_info, r.classical_corr,
                     r.d1, r.d2, r.discord}) {
        line += format_number(v);
        line += ',';
    }
    line += to_string(r.branch);
    for (double v : {r.concurrence, r.eof, r.purity}) {
        line += ',';
        line += format_number(v);
    }
    return line;
}

namespace {

json config_json(const RunConfig& cfg) {
    return json{{"env", to_string(cfg.env)},
                {"alpha2", cfg.alpha2},
                {"lambda_over_gamma0", cfg.lambda_over_gamma0},
                {"t_max_gamma0", cfg.t_max_gamma0},
                {"dt_gamma0", cfg.dt_gamma0},
                {"record_every", cfg.record_every},
                {"format", cfg.format == OutputFormat::csv ? "csv" : "json"},
                {"events", cfg.events}};
}

json events_json(const EventReport& rep) {
    json j;
    j["discord_zero_times"] = rep.discord_zero_times;
    j["discord_zero_intervals"] = json::array();
    for (const auto& iv : rep.discord_zero_intervals)
        j["discord_zero_intervals"].push_back({iv.t_start, iv.t_end});
    j["branch_switch_times"] = rep.branch_switch_times;
    j["esd_intervals"] = json::array();
    for (const auto& iv : rep.esd_intervals) j["esd_intervals"].push_back({iv.t_start, iv.t_end});
    j["entanglement_revival_times"] = rep.entanglement_revival_times;
    if (rep.discord_birth_time)
        j["discord_birth_time"] = *rep.discord_birth_time;
    else
        j["discord_birth_time"] = nullptr;
    return j;
}

std::ofstream open_or_throw(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

} // namespace

std::string event_report_json(const EventReport& rep) { return events_json(rep).dump(); }

void write_csv(const std::string& path, std::span<const TrajectoryRecord> records,
               const RunConfig& /*cfg*/, const EventReport* events) {
    auto out = open_or_throw(path);
    const auto& cols = trajectory_columns();
    for (size_t i = 0; i < cols.size(); ++i) out << cols[i] << (i + 1 < cols.size() ? ',' : '\n');
    for (const auto& r : records) out << csv_line(r) << '\n';
    if (events) out << "# events " << events_json(*events).dump() << '\n';
}

void write_json(const std::string& path, std::span<const TrajectoryRecord> records,
                const RunConfig& cfg, const EventReport* events) {
    json j;
    j["config"] = config_json(cfg);
    j["columns"] = trajectory_columns();
    json data = json::array();
    for (const auto& r : records) {
        data.push_back({r.t, r.x.a, r.x.b, r.x.d, r.x.w, r.x.z, r.mutual_info, r.classical_corr,
                        r.d1, r.d2, r.discord, to_string(r.branch), r.concurrence, r.eof,
                        r.purity});
    }
    j["data"] = std::move(data);
    if (events) j["events"] = events_json(*events);
    auto out = open_or_throw(path);
    out << j.dump(2) << '\n';
}

void write_output(const std::string& path, std::span<const TrajectoryRecord> records,
                  const RunConfig& cfg, const EventReport* events) {
    if (cfg.format == OutputFormat::csv)
        write_csv(path, records, cfg, events);
    else
        write_json(path, records, cfg, events);
}

std::vector<TrajectoryRecord> read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::vector<TrajectoryRecord> records;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true; // column order is fixed
            continue;
        }
        std::istringstream row(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(row, cell, ',')) cells.push_back(cell);
        if (cells.size() != trajectory_columns().size())
            throw std::runtime_error("malformed CSV row: " + line);
        TrajectoryRecord r;
        r.t = std::stod(cells[0]);
        r.x.a = std::stod(cells[1]);
        r.x.b = std::stod(cells[2]);
        r.x.d = std::stod(cells[3]);
        r.x.w = std::stod(cells[4]);
        r.x.z = std::stod(cells[5]);
        r.mutual_info = std::stod(cells[6]);
        r.classical_corr = std::stod(cells[7]);
        r.d1 = std::stod(cells[8]);
        r.d2 = std::stod(cells[9]);
        r.discord = std::stod(cells[10]);
        if (cells[11] == "D1")
            r.branch = Branch::D1;
        else if (cells[11] == "D2")
            r.branch = Branch::D2;
        else
            throw std::runtime_error("malformed branch label: " + cells[11]);
        r.concurrence = std::stod(cells[12]);
        r.eof = std::stod(cells[13]);
        r.purity = std::stod(cells[14]);
        records.push_back(r);
    }
    return records;
}

void write_manifest(const std::string& path, const std::string& param,
                    const RunConfig& base, std::span<const SweepEntry> entries, int jobs) {
    json j;
    j["param"] = param;
    j["base_config"] = config_json(base);
    j["jobs"] = jobs;
    json list = json::array();
    for (const auto& e : entries) list.push_back({{"value", e.value}, {"file", e.file}});
    j["entries"] = std::move(list);
    auto out = open_or_throw(path);
    out << j.dump(2) << '\n';
}

} // namespace qcorr
