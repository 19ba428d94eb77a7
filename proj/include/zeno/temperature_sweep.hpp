#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zeno/thermal_field.hpp"

namespace zeno {

struct TemperaturePoint {
    double t_over_omega;
    double tau_z;
};

/// Thermal Zeno time along a grid of T / omega. The template supplies g,
/// omega and the thermal-factor mode; its temperature is ignored.
///
/// Grid points are evaluated independently on up to `threads` workers and
/// written back by index, so the result does not depend on the thread count.
/// Throws InvalidArgument unless the grid is strictly increasing from >= 0.
std::vector<TemperaturePoint> temperature_sweep(const ThermalFieldParams& base, long long n_big,
                                                std::span<const double> t_over_omega,
                                                std::size_t threads = 1);

}  // namespace zeno
