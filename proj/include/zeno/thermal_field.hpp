#pragma once

// Two-level atom coupled to a thermal magnetic field: Planck occupation,
// population inversion rate and the resulting Zeno time.

#include <string_view>

#include "zeno/zeno_dynamics.hpp"

namespace zeno {

/// How the thermal enhancement of the decay rate is evaluated.
///
/// derived_coth uses 2N(omega) + 1 = coth(omega / 2T). paper_literal squares
/// the hyperbolic cotangent, reproducing the printed closed forms. Both equal
/// 1 at T = 0.
enum class ThermalFactorMode { paper_literal, derived_coth };

std::string_view to_string(ThermalFactorMode m);

struct ThermalFieldParams {
    double g = 0.1;            ///< system-field coupling
    double omega = 1.0;        ///< Rabi frequency
    double temperature = 0.0;  ///< k_B T in units of energy
    ThermalFactorMode mode = ThermalFactorMode::derived_coth;

    void validate() const;
};

/// 1 / (e^{omega/T} - 1); zero at T = 0.
double planck_occupation(double omega, double temperature);

double thermal_factor(const ThermalFieldParams& p);

/// 4 g^2 omega * thermal_factor(p)
double gamma_thermal(const ThermalFieldParams& p);

/// Interval between successive measurement interactions, tied to the
/// field's resonant period: tau_M = 1 / omega.
double measurement_time_for(double omega);

/// sqrt(N/2) / omega * (1 + 2 g^2 N thermal_factor)^{-1/2}
ZenoEstimate zeno_time_thermal(const ThermalFieldParams& p, long long n_big);

/// Zero-temperature value sqrt(N/2) / omega * (1 + 2 g^2 N)^{-1/2}.
double zero_temperature_zeno_time(double omega, double g, long long n_big);

/// Supremum over N of the zero-temperature Zeno time: 1 / (2 omega g).
double quasi_continuous_zeno_limit(double omega, double g);

}  // namespace zeno
