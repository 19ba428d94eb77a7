#include "zeno/cli/run_config.hpp"

#include <cmath>

#include "zeno/cli/sweep_table.hpp"

namespace zeno::cli {

std::string to_string(Command c) {
    switch (c) {
        case Command::zeno_time: return "zeno-time";
        case Command::sweep_temperature: return "sweep-temperature";
        case Command::simulate_projective: return "simulate-projective";
        case Command::weak_survival: return "weak-survival";
        case Command::verify_bath: return "verify-bath";
    }
    return "unknown";
}

ConfigError::ConfigError(std::string key, const std::string& constraint)
    : InvalidArgument("invalid '" + key + "': " + constraint), key_(std::move(key)) {}

std::vector<double> make_grid(const GridSpec& g) {
    if (g.count < 2) throw ConfigError("grid-count", "must be >= 2");
    std::vector<double> out(static_cast<std::size_t>(g.count));
    const double last = static_cast<double>(g.count - 1);
    for (long long k = 0; k < g.count; ++k) {
        const double f = static_cast<double>(k) / last;
        out[static_cast<std::size_t>(k)] =
            g.log ? std::exp(std::log(g.start) + f * (std::log(g.stop) - std::log(g.start)))
                  : g.start + f * (g.stop - g.start);
    }
    out.front() = g.start;
    out.back() = g.stop;
    return out;
}

namespace {

void require(bool ok, const char* key, const char* constraint) {
    if (!ok) throw ConfigError(key, constraint);
}

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }
bool finite_nonnegative(double v) { return std::isfinite(v) && v >= 0.0; }

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

void RunConfig::resolve() {
    switch (command) {
        case Command::zeno_time: break;
        case Command::sweep_temperature:
            if (!grid_start) grid_start = 0.0;
            if (!grid_stop) grid_stop = 5.0;
            if (!grid_count) grid_count = 51;
            if (!grid_log) grid_log = false;
            break;
        case Command::simulate_projective:
            if (!grid_start) grid_start = 1.0;
            if (!grid_stop) grid_stop = 1e4;
            if (!grid_count) grid_count = 5;
            if (!grid_log) grid_log = true;
            break;
        case Command::weak_survival:
            if (!grid_start) grid_start = ti;
            if (!grid_stop) grid_stop = tf;
            if (!grid_count) grid_count = 11;
            if (!grid_log) grid_log = false;
            break;
        case Command::verify_bath:
            if (!delta_e && gamma > 0.0) delta_e = gamma / 20.0;
            if (!bandwidth && gamma > 0.0) bandwidth = 50.0 * gamma;
            if (!grid_start) grid_start = 0.0;
            if (!grid_stop && gamma > 0.0) grid_stop = 2.0 / gamma;
            if (!grid_count) grid_count = 101;
            if (!grid_log) grid_log = false;
            break;
    }
}

void RunConfig::validate() const {
    require(threads >= 1, "threads", "must be >= 1");
    const bool uses_grid = command != Command::zeno_time;

    switch (command) {
        case Command::zeno_time:
            require(method == "variance" || method == "weak" || method == "thermal", "method",
                    "must be one of variance, weak, thermal");
            if (method == "variance") {
                require(finite_positive(omega), "omega", "must be finite and > 0");
            } else if (method == "weak") {
                require(finite_nonnegative(gamma), "gamma", "must be finite and >= 0");
                require(finite_positive(tau_m), "tau-m", "must be finite and > 0");
                require(n_measurements >= 1, "n-measurements", "must be >= 1");
            } else {
                require(finite_positive(omega), "omega", "must be finite and > 0");
                require(finite_nonnegative(g), "g", "must be finite and >= 0");
                require(finite_nonnegative(temperature), "temperature", "must be finite and >= 0");
                require(n_measurements >= 1, "n-measurements", "must be >= 1");
                require(mode == "paper" || mode == "derived" || mode == "both", "mode",
                        "must be one of paper, derived, both");
            }
            break;
        case Command::sweep_temperature:
            require(finite_positive(omega), "omega", "must be finite and > 0");
            require(finite_nonnegative(g), "g", "must be finite and >= 0");
            require(n_measurements >= 1, "n-measurements", "must be >= 1");
            require(mode == "paper" || mode == "derived" || mode == "both", "mode",
                    "must be one of paper, derived, both");
            require(finite_nonnegative(*grid_start), "grid-start", "temperature ratio must be finite and >= 0");
            break;
        case Command::simulate_projective:
            require(finite_positive(omega), "omega", "must be finite and > 0");
            require(finite_positive(tau), "tau", "must be finite and > 0");
            require(std::isfinite(*grid_start) && *grid_start >= 1.0, "grid-start",
                    "measurement count must be >= 1");
            break;
        case Command::weak_survival:
            require(finite_nonnegative(gamma), "gamma", "must be finite and >= 0");
            require(std::isfinite(ti), "ti", "must be finite");
            require(std::isfinite(tf) && tf > ti, "tf", "must be finite and > ti");
            require(std::isfinite(*grid_start) && *grid_start >= ti, "grid-start", "must lie within [ti, tf]");
            require(std::isfinite(*grid_stop) && *grid_stop <= tf, "grid-stop", "must lie within [ti, tf]");
            break;
        case Command::verify_bath:
            require(finite_nonnegative(gamma), "gamma", "must be finite and >= 0");
            require(delta_e.has_value(), "delta-e", "required when gamma = 0");
            require(finite_positive(*delta_e), "delta-e", "must be finite and > 0");
            require(bandwidth.has_value(), "bandwidth", "required when gamma = 0");
            require(finite_positive(*bandwidth), "bandwidth", "must be finite and > 0");
            require(!coupling || finite_nonnegative(*coupling), "coupling", "must be finite and >= 0");
            require(grid_stop.has_value(), "grid-stop", "required when gamma = 0");
            require(finite_nonnegative(*grid_start), "grid-start", "time must be finite and >= 0");
            break;
    }

    if (uses_grid) {
        require(*grid_count >= 2, "grid-count", "must be >= 2");
        require(std::isfinite(*grid_stop) && *grid_stop > *grid_start, "grid-stop",
                "must be finite and > grid-start");
        require(!*grid_log || *grid_start > 0.0, "grid-log", "log spacing needs grid-start > 0");
    }
}

GridSpec RunConfig::grid() const {
    return {grid_start.value_or(0.0), grid_stop.value_or(1.0), grid_count.value_or(2), grid_log.value_or(false)};
}

std::vector<std::pair<std::string, std::string>> RunConfig::echo() const {
    std::vector<std::pair<std::string, std::string>> out;
    auto num = [&](const char* key, double v) { out.emplace_back(key, format_number(v)); };
    auto integer = [&](const char* key, long long v) { out.emplace_back(key, std::to_string(v)); };
    auto text = [&](const char* key, std::string v) { out.emplace_back(key, std::move(v)); };

    text("command", to_string(command));
    switch (command) {
        case Command::zeno_time:
            text("method", method);
            if (method == "variance") {
                num("omega", omega);
                text("state", "x-polarized");
            } else if (method == "weak") {
                num("gamma", gamma);
                num("tau-m", tau_m);
                integer("n-measurements", n_measurements);
            } else {
                num("omega", omega);
                num("g", g);
                num("temperature", temperature);
                text("mode", mode);
                integer("n-measurements", n_measurements);
            }
            break;
        case Command::sweep_temperature:
            num("omega", omega);
            num("g", g);
            text("mode", mode);
            integer("n-measurements", n_measurements);
            break;
        case Command::simulate_projective:
            num("omega", omega);
            num("tau", tau);
            text("state", "x-polarized");
            break;
        case Command::weak_survival:
            num("gamma", gamma);
            num("ti", ti);
            num("tf", tf);
            break;
        case Command::verify_bath:
            num("gamma", gamma);
            num("delta-e", *delta_e);
            num("bandwidth", *bandwidth);
            if (coupling) num("coupling", *coupling);
            else text("coupling", "calibrated");
            break;
    }
    if (command != Command::zeno_time) {
        num("grid-start", *grid_start);
        num("grid-stop", *grid_stop);
        integer("grid-count", *grid_count);
        text("grid-log", yes_no(*grid_log));
    }
    return out;
}

}  // namespace zeno::cli
