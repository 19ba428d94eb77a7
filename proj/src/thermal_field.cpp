#include "zeno/thermal_field.hpp"

#include <cmath>

#include "zeno/errors.hpp"
#include "zeno/weak_measurement.hpp"

namespace zeno {

std::string_view to_string(ThermalFactorMode m) {
    return m == ThermalFactorMode::paper_literal ? "paper" : "derived";
}

void ThermalFieldParams::validate() const {
    if (!std::isfinite(g) || g < 0.0) throw InvalidArgument("g must be finite and >= 0");
    if (!std::isfinite(omega) || !(omega > 0.0)) throw InvalidArgument("omega must be finite and > 0");
    if (!std::isfinite(temperature) || temperature < 0.0) {
        throw InvalidArgument("temperature must be finite and >= 0");
    }
}

double planck_occupation(double omega, double temperature) {
    if (!std::isfinite(omega) || !(omega > 0.0)) throw InvalidArgument("omega must be finite and > 0");
    if (!std::isfinite(temperature) || temperature < 0.0) {
        throw InvalidArgument("temperature must be finite and >= 0");
    }
    if (temperature == 0.0) return 0.0;
    return 1.0 / std::expm1(omega / temperature);
}

double thermal_factor(const ThermalFieldParams& p) {
    p.validate();
    // coth(omega / 2T) = 2N + 1; reaches exactly 1 at T = 0.
    const double coth = 2.0 * planck_occupation(p.omega, p.temperature) + 1.0;
    return p.mode == ThermalFactorMode::paper_literal ? coth * coth : coth;
}

double gamma_thermal(const ThermalFieldParams& p) {
    return 4.0 * p.g * p.g * p.omega * thermal_factor(p);
}

double measurement_time_for(double omega) {
    if (!std::isfinite(omega) || !(omega > 0.0)) throw InvalidArgument("omega must be finite and > 0");
    return 1.0 / omega;
}

ZenoEstimate zeno_time_thermal(const ThermalFieldParams& p, long long n_big) {
    p.validate();
    if (n_big < 1) throw InvalidArgument("N must be >= 1");
    const double n = static_cast<double>(n_big);

    ZenoEstimate out = weak_zeno_time(gamma_thermal(p), measurement_time_for(p.omega), n_big);
    out.tau_z = std::sqrt(0.5 * n) / p.omega / std::sqrt(1.0 + 2.0 * p.g * p.g * n * thermal_factor(p));
    out.method = ZenoMethod::thermal;
    return out;
}

double zero_temperature_zeno_time(double omega, double g, long long n_big) {
    if (n_big < 1) throw InvalidArgument("N must be >= 1");
    ThermalFieldParams{g, omega, 0.0}.validate();
    const double n = static_cast<double>(n_big);
    return std::sqrt(0.5 * n) / omega / std::sqrt(1.0 + 2.0 * g * g * n);
}

double quasi_continuous_zeno_limit(double omega, double g) {
    ThermalFieldParams{g, omega, 0.0}.validate();
    if (!(g > 0.0)) throw DivergentZenoTime("decoupled atom: Zeno time grows without bound in N");
    return 1.0 / (2.0 * omega * g);
}

}  // namespace zeno
