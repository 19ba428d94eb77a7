#pragma once

#include "zeno/cli/run_config.hpp"
#include "zeno/cli/sweep_table.hpp"

namespace zeno::cli {

// Each command expects a resolved and validated config. Library errors
// propagate unchanged (NumericalError for regime or convergence failures).

/// Columns: method, mode, delta_H, tau_Z, tau_M, tau_L.
SweepTable cmd_zeno_time(const RunConfig& cfg);

/// Columns: T_over_omega, tau_Z, mode; or T_over_omega, tau_Z_paper,
/// tau_Z_derived when both thermal-factor modes are requested.
SweepTable cmd_sweep_temperature(const RunConfig& cfg);

/// Columns: n, P_formula, P_simulated, P_exponential, formula_in_regime,
/// exponential_in_regime. P_formula is left empty outside its regime.
SweepTable cmd_simulate_projective(const RunConfig& cfg);

/// Columns: t, P_w.
SweepTable cmd_weak_survival(const RunConfig& cfg);

/// Columns: t, abs_U00, exp_minus_gamma_t, rel_error; max_rel_error is
/// appended to the metadata.
SweepTable cmd_verify_bath(const RunConfig& cfg);

SweepTable run_command(const RunConfig& cfg);

}  // namespace zeno::cli
