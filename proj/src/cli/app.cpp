#include "zeno/cli/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <ostream>

#include "zeno/cli/commands.hpp"

namespace zeno::cli {

namespace {

struct Parser {
    CLI::App app{"Quantum Zeno timescales of a two-level atom in a thermal magnetic field", "zeno-thermal"};
    RunConfig cfg;
    std::string config_path;
    std::map<CLI::App*, Command> commands;

    Parser() {
        app.require_subcommand(1);
        app.set_config("--config", "", "flat `key = value` file; command-line flags override it");
        app.allow_config_extras(CLI::config_extras_mode::error);

        app.add_option("--out", cfg.out_path, "CSV output path (default: stdout)");
        app.add_option("--threads", cfg.threads, "worker threads for sweeps (output is identical for any value)");
        app.add_option("--mode", cfg.mode, "thermal factor: paper, derived or both")->capture_default_str();
        app.add_option("--method", cfg.method, "zeno-time formula: variance, weak or thermal")->capture_default_str();
        app.add_option("--omega", cfg.omega, "Rabi frequency")->capture_default_str();
        app.add_option("--g", cfg.g, "system-field coupling")->capture_default_str();
        app.add_option("--temperature", cfg.temperature, "k_B T")->capture_default_str();
        app.add_option("--n-measurements", cfg.n_measurements, "measurement count N")->capture_default_str();
        app.add_option("--gamma", cfg.gamma, "decay rate")->capture_default_str();
        app.add_option("--ti", cfg.ti, "pre-selection time")->capture_default_str();
        app.add_option("--tf", cfg.tf, "post-selection time")->capture_default_str();
        app.add_option("--tau", cfg.tau, "total monitored duration")->capture_default_str();
        app.add_option("--tau-m", cfg.tau_m, "measurement interval")->capture_default_str();
        app.add_option("--grid-start", cfg.grid_start, "first grid value");
        app.add_option("--grid-stop", cfg.grid_stop, "last grid value");
        app.add_option("--grid-count", cfg.grid_count, "number of grid points");
        app.add_option("--grid-log", cfg.grid_log, "logarithmic spacing (true/false)");
        app.add_option("--delta-e", cfg.delta_e, "bath level spacing (default gamma/20)");
        app.add_option("--bandwidth", cfg.bandwidth, "bath half-bandwidth (default 50 gamma)");
        app.add_option("--coupling", cfg.coupling, "bath coupling (default calibrated to gamma)");

        add_command(Command::zeno_time, "single Zeno time estimate");
        add_command(Command::sweep_temperature, "thermal Zeno time over a T/omega grid");
        add_command(Command::simulate_projective, "pulsed survival: formula, brute force, exponential");
        add_command(Command::weak_survival, "weak decay law over [ti, tf]");
        add_command(Command::verify_bath, "discretized bath amplitude against exp(-gamma t)");
    }

    void add_command(Command c, const std::string& description) {
        CLI::App* sub = app.add_subcommand(to_string(c), description);
        sub->fallthrough();
        commands[sub] = c;
    }

    void parse(const std::vector<std::string>& args) {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        for (const auto& [sub, c] : commands) {
            if (sub->parsed()) cfg.command = c;
        }
        cfg.resolve();
        cfg.validate();
    }
};

void write_output(const RunConfig& cfg, const SweepTable& table, std::ostream& out) {
    if (cfg.out_path.empty()) {
        write_csv(table, out);
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw ConfigError("out", "cannot open '" + cfg.out_path + "' for writing");
    write_csv(table, file);
    if (!file) throw ConfigError("out", "failed writing '" + cfg.out_path + "'");
}

}  // namespace

RunConfig parse_arguments(const std::vector<std::string>& args) {
    Parser parser;
    try {
        parser.parse(args);
    } catch (const CLI::ParseError& e) {
        throw ConfigError("arguments", e.what());
    }
    return parser.cfg;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Parser parser;
    try {
        parser.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return parser.app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return parser.app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "zeno-thermal: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ConfigError& e) {
        err << "zeno-thermal: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        write_output(parser.cfg, run_command(parser.cfg), out);
    } catch (const ConfigError& e) {
        err << "zeno-thermal: " << e.what() << '\n';
        return kExitConfig;
    } catch (const InvalidArgument& e) {
        err << "zeno-thermal: " << e.what() << '\n';
        return kExitConfig;
    } catch (const NumericalError& e) {
        err << "zeno-thermal: numerical error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitOk;
}

}  // namespace zeno::cli
