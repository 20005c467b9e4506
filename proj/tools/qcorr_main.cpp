// qcorr — two-qubit amplitude-damping trajectories (independent and common
// Lorentzian reservoirs) with discord / classical-correlation / entanglement
// tracking and event detection.
//
// Subcommands: simulate, sweep, validate, events.
// Exit codes: 0 success, 1 validation failure, 2 usage error, 3 numerical failure.

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qcorr/io.hpp"
#include "qcorr/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct CliOptions {
    qcorr::RunConfig run;
    std::string env_name = "independent";
    std::string format_name = "csv";
    // sweep
    std::string sweep_param;
    std::vector<double> sweep_values;
    std::string out_dir = ".";
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    // events
    std::string input_path;
    double discord_tol = qcorr::EventTolerances{}.discord_zero;
    double concurrence_tol = qcorr::EventTolerances{}.concurrence;
    double birth_threshold = qcorr::EventTolerances{}.birth_threshold;
    // validate
    qcorr::ValidationOptions validation;
};

void fill_run_config(CliOptions& opt) {
    opt.run.env = (opt.env_name == "common") ? qcorr::Environment::common
                                             : qcorr::Environment::independent;
    opt.run.format = (opt.format_name == "json") ? qcorr::OutputFormat::json
                                                 : qcorr::OutputFormat::csv;
}

void add_run_flags(CLI::App* cmd, CliOptions& opt, bool with_out) {
    cmd->add_option("--env", opt.env_name, "Reservoir topology")
        ->check(CLI::IsMember({"independent", "common"}))
        ->capture_default_str();
    cmd->add_option("--alpha2", opt.run.alpha2, "|00> weight of the Bell-like initial state")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd->add_option("--lambda", opt.run.lambda_over_gamma0, "Spectral width lambda/gamma0")
        ->capture_default_str();
    cmd->add_option("--t-max", opt.run.t_max_gamma0, "Horizon in units of 1/gamma0")
        ->capture_default_str();
    cmd->add_option("--dt", opt.run.dt_gamma0, "Time step in units of 1/gamma0")
        ->capture_default_str();
    cmd->add_option("--record-every", opt.run.record_every, "Record stride in steps")
        ->capture_default_str();
    cmd->add_option("--format", opt.format_name, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    if (with_out) {
        cmd->add_option("--out", opt.run.output_path, "Output file")->required();
        cmd->add_flag("--events", opt.run.events, "Append an event report to the output");
    }
}

int run_simulate(CliOptions& opt) {
    fill_run_config(opt);
    try {
        opt.run.validate();
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    }
    try {
        const auto result = qcorr::run_trajectory(opt.run.env, {opt.run.alpha2},
                                                  opt.run.reservoir(), opt.run.integrator());
        qcorr::EventReport report;
        if (opt.run.events) report = qcorr::build_event_report(result.records);
        qcorr::write_output(opt.run.output_path, result.records, opt.run,
                            opt.run.events ? &report : nullptr);
    } catch (const qcorr::integration_error& e) {
        std::cerr << "integration failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}

int run_sweep(CliOptions& opt) {
    fill_run_config(opt);
    for (size_t i = 0; i < opt.sweep_values.size(); ++i)
        for (size_t j = i + 1; j < opt.sweep_values.size(); ++j)
            if (opt.sweep_values[i] == opt.sweep_values[j]) {
                std::cerr << "config error: duplicate sweep value "
                          << qcorr::format_number(opt.sweep_values[i]) << "\n";
                return kExitUsage;
            }

    std::error_code ec;
    std::filesystem::create_directories(opt.out_dir, ec);

    const std::string ext = opt.format_name == "json" ? ".json" : ".csv";
    std::vector<qcorr::SweepEntry> entries(opt.sweep_values.size());
    std::vector<qcorr::RunConfig> configs(opt.sweep_values.size());
    for (size_t i = 0; i < opt.sweep_values.size(); ++i) {
        qcorr::RunConfig cfg = opt.run;
        if (opt.sweep_param == "alpha2")
            cfg.alpha2 = opt.sweep_values[i];
        else
            cfg.lambda_over_gamma0 = opt.sweep_values[i];
        const std::string name =
            opt.sweep_param + "_" + qcorr::format_number(opt.sweep_values[i]) + ext;
        cfg.output_path = (std::filesystem::path(opt.out_dir) / name).string();
        try {
            cfg.validate();
        } catch (const std::exception& e) {
            std::cerr << "config error at " << opt.sweep_param << " = " << opt.sweep_values[i]
                      << ": " << e.what() << "\n";
            return kExitUsage;
        }
        entries[i] = {opt.sweep_values[i], name};
        configs[i] = cfg;
    }

    // each sweep point owns its trajectory end to end; workers pull indices
    std::atomic<size_t> next{0};
    std::mutex err_mutex;
    std::vector<std::string> errors;
    auto worker = [&]() {
        for (size_t i = next.fetch_add(1); i < configs.size(); i = next.fetch_add(1)) {
            try {
                const auto result =
                    qcorr::run_trajectory(configs[i].env, {configs[i].alpha2},
                                          configs[i].reservoir(), configs[i].integrator());
                qcorr::EventReport report;
                if (configs[i].events) report = qcorr::build_event_report(result.records);
                qcorr::write_output(configs[i].output_path, result.records, configs[i],
                                    configs[i].events ? &report : nullptr);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(err_mutex);
                errors.emplace_back(e.what());
            }
        }
    };
    const int n_jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(configs.size()) + 1));
    std::vector<std::thread> pool;
    for (int j = 0; j < n_jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    if (!errors.empty()) {
        for (const auto& e : errors) std::cerr << "sweep point failed: " << e << "\n";
        return kExitNumerical;
    }
    const auto manifest = std::filesystem::path(opt.out_dir) / "manifest.json";
    qcorr::write_manifest(manifest.string(), opt.sweep_param, opt.run, entries, n_jobs);
    return kExitOk;
}

int run_validate(const CliOptions& opt) {
    bool all_pass = true;
    for (const auto& res : qcorr::run_validation(opt.validation)) {
        std::printf("%-32s %s  (%s)\n", res.name.c_str(), res.pass ? "PASS" : "FAIL",
                    res.detail.c_str());
        all_pass = all_pass && res.pass;
    }
    return all_pass ? kExitOk : kExitValidation;
}

int run_events(const CliOptions& opt) {
    try {
        const auto records = qcorr::read_csv(opt.input_path);
        qcorr::EventTolerances tol;
        tol.discord_zero = opt.discord_tol;
        tol.concurrence = opt.concurrence_tol;
        tol.birth_threshold = opt.birth_threshold;
        const auto report = qcorr::build_event_report(records, tol);
        std::cout << qcorr::event_report_json(report) << "\n";
    } catch (const std::exception& e) {
        // unreadable or malformed input is a usage problem, not a numerical one
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-qubit non-Markovian amplitude-damping trajectories with "
                 "quantum-discord and entanglement tracking"};
    app.require_subcommand(1);
    CliOptions opt;

    auto* simulate = app.add_subcommand("simulate", "Run one trajectory and write it out");
    add_run_flags(simulate, opt, true);

    auto* sweep = app.add_subcommand("sweep", "Run one trajectory per parameter value");
    add_run_flags(sweep, opt, false);
    sweep->add_option("--param", opt.sweep_param, "Parameter to sweep")
        ->check(CLI::IsMember({"alpha2", "lambda"}))
        ->required();
    sweep->add_option("--values", opt.sweep_values, "Sweep values")->expected(-1);
    sweep->add_option("--out-dir", opt.out_dir, "Output directory")->capture_default_str();
    sweep->add_option("--jobs", opt.jobs, "Worker threads")->capture_default_str();
    sweep->add_flag("--events", opt.run.events, "Append event reports to each output");

    auto* validate = app.add_subcommand("validate", "Run the self-validation suites");
    validate->add_option("--seed", opt.validation.seed, "Seed for the random-state suite")
        ->capture_default_str();
    validate->add_option("--states", opt.validation.n_states, "Random states in the oracle suite")
        ->capture_default_str();
    validate->add_option("--hook-omega0-scale", opt.validation.omega0_scale)->group("");
    validate->add_flag("--hook-flip-d2-sign", opt.validation.flip_d2_sign)->group("");

    auto* events = app.add_subcommand("events", "Re-run event detection on an existing CSV");
    events->add_option("--in", opt.input_path, "Trajectory CSV")->required();
    events->add_option("--discord-tol", opt.discord_tol, "Discord zero tolerance (bits)")
        ->capture_default_str();
    events->add_option("--concurrence-tol", opt.concurrence_tol, "ESD concurrence tolerance")
        ->capture_default_str();
    events->add_option("--birth-threshold", opt.birth_threshold, "Discord birth threshold (bits)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (simulate->parsed()) return run_simulate(opt);
    if (sweep->parsed()) return run_sweep(opt);
    if (validate->parsed()) return run_validate(opt);
    if (events->parsed()) return run_events(opt);
    return kExitUsage;
}
