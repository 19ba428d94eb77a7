#include "zeno/cli/commands.hpp"

#include <algorithm>
#include <cmath>

#include "zeno/bath_oracle.hpp"
#include "zeno/temperature_sweep.hpp"
#include "zeno/thermal_field.hpp"
#include "zeno/weak_measurement.hpp"
#include "zeno/zeno_dynamics.hpp"

namespace zeno::cli {

namespace {

Cell optional_cell(const std::optional<double>& v) {
    if (v) return *v;
    return std::string{};
}

std::vector<ThermalFactorMode> modes_for(const std::string& mode) {
    if (mode == "paper") return {ThermalFactorMode::paper_literal};
    if (mode == "derived") return {ThermalFactorMode::derived_coth};
    return {ThermalFactorMode::paper_literal, ThermalFactorMode::derived_coth};
}

SweepTable table_for(const RunConfig& cfg, std::vector<std::string> columns) {
    SweepTable t;
    t.columns = std::move(columns);
    t.metadata = cfg.echo();
    return t;
}

}  // namespace

SweepTable cmd_zeno_time(const RunConfig& cfg) {
    SweepTable table = table_for(cfg, {"method", "mode", "delta_H", "tau_Z", "tau_M", "tau_L"});
    auto add = [&](const ZenoEstimate& e, std::string mode) {
        table.add_row({std::string(to_string(e.method)), std::move(mode), optional_cell(e.delta_h), e.tau_z,
                       optional_cell(e.tau_m), optional_cell(e.tau_l)});
    };

    if (cfg.method == "variance") {
        add(zeno_time_variance(SystemParams{cfg.omega}, x_polarized_state()), "");
    } else if (cfg.method == "weak") {
        add(weak_zeno_time(cfg.gamma, cfg.tau_m, cfg.n_measurements), "");
    } else {
        for (const ThermalFactorMode m : modes_for(cfg.mode)) {
            const ThermalFieldParams p{cfg.g, cfg.omega, cfg.temperature, m};
            add(zeno_time_thermal(p, cfg.n_measurements), std::string(to_string(m)));
        }
    }
    return table;
}

SweepTable cmd_sweep_temperature(const RunConfig& cfg) {
    const std::vector<ThermalFactorMode> modes = modes_for(cfg.mode);
    const std::vector<double> grid = make_grid(cfg.grid());

    std::vector<std::vector<TemperaturePoint>> columns;
    for (const ThermalFactorMode m : modes) {
        const ThermalFieldParams base{cfg.g, cfg.omega, 0.0, m};
        columns.push_back(temperature_sweep(base, cfg.n_measurements, grid, cfg.threads));
    }

    if (modes.size() == 1) {
        SweepTable table = table_for(cfg, {"T_over_omega", "tau_Z", "mode"});
        const std::string tag(to_string(modes.front()));
        for (const auto& pt : columns.front()) table.add_row({pt.t_over_omega, pt.tau_z, tag});
        return table;
    }
    SweepTable table = table_for(cfg, {"T_over_omega", "tau_Z_paper", "tau_Z_derived"});
    for (std::size_t k = 0; k < grid.size(); ++k) {
        table.add_row({grid[k], columns[0][k].tau_z, columns[1][k].tau_z});
    }
    return table;
}

SweepTable cmd_simulate_projective(const RunConfig& cfg) {
    SweepTable table = table_for(cfg, {"n", "P_formula", "P_simulated", "P_exponential", "formula_in_regime",
                                       "exponential_in_regime"});
    const SystemParams p{cfg.omega};
    const PureState psi = x_polarized_state();
    const double delta_h = energy_variance(p, psi);
    const double tau_z = zeno_time_variance(p, psi).tau_z;

    // Integer measurement counts; rounding a log grid can repeat a count.
    std::vector<long long> counts;
    for (double x : make_grid(cfg.grid())) {
        const long long n = std::llround(x);
        if (counts.empty() || n > counts.back()) counts.push_back(n);
    }

    for (const long long n : counts) {
        const MeasurementSchedule sched(cfg.tau, n);
        Cell formula = std::string{};
        long long formula_ok = 1;
        try {
            formula = pulsed_survival_formula(delta_h, sched);
        } catch (const RegimeError&) {
            formula_ok = 0;
        }
        const Flagged<double> expo = effective_exponential_survival(cfg.tau, sched.tau_m(), tau_z);
        table.add_row({n, formula, pulsed_survival_simulated(p, psi, sched), expo.value, formula_ok,
                       static_cast<long long>(expo.in_regime)});
    }
    return table;
}

SweepTable cmd_weak_survival(const RunConfig& cfg) {
    SweepTable table = table_for(cfg, {"t", "P_w"});
    const DecayModel decay{cfg.gamma};
    for (double t : make_grid(cfg.grid())) table.add_row({t, weak_survival(decay, cfg.ti, cfg.tf, t)});
    return table;
}

SweepTable cmd_verify_bath(const RunConfig& cfg) {
    SweepTable table = table_for(cfg, {"t", "abs_U00", "exp_minus_gamma_t", "rel_error"});
    BathDiscretization bath = BathDiscretization::calibrated(cfg.gamma, *cfg.delta_e, *cfg.bandwidth);
    if (cfg.coupling) bath.coupling = *cfg.coupling;

    const std::vector<double> grid = make_grid(cfg.grid());
    if (grid.back() > bath.recurrence_time()) {
        throw ConvergenceError("grid-stop = " + format_number(grid.back()) +
                               " exceeds the recurrence horizon 2 pi / delta-e = " +
                               format_number(bath.recurrence_time()));
    }

    const BathSpectrum spectrum(bath);
    double max_rel = 0.0;
    for (double t : grid) {
        const double amp = std::abs(spectrum.amplitude(t));
        const double reference = std::exp(-cfg.gamma * t);
        const double rel = std::abs(amp - reference) / reference;
        max_rel = std::max(max_rel, rel);
        table.add_row({t, amp, reference, rel});
    }
    table.metadata.emplace_back("n-side", std::to_string(bath.n_side));
    table.metadata.emplace_back("resolved-coupling", format_number(bath.coupling));
    table.metadata.emplace_back("max_rel_error", format_number(max_rel));
    return table;
}

SweepTable run_command(const RunConfig& cfg) {
    switch (cfg.command) {
        case Command::zeno_time: return cmd_zeno_time(cfg);
        case Command::sweep_temperature: return cmd_sweep_temperature(cfg);
        case Command::simulate_projective: return cmd_simulate_projective(cfg);
        case Command::weak_survival: return cmd_weak_survival(cfg);
        case Command::verify_bath: return cmd_verify_bath(cfg);
    }
    throw InvalidArgument("unknown command");
}

}  // namespace zeno::cli
