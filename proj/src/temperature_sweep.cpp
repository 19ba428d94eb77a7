#include "zeno/temperature_sweep.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "zeno/errors.hpp"

namespace zeno {

std::vector<TemperaturePoint> temperature_sweep(const ThermalFieldParams& base, long long n_big,
                                                std::span<const double> t_over_omega,
                                                std::size_t threads) {
    base.validate();
    if (n_big < 1) throw InvalidArgument("N must be >= 1");
    if (t_over_omega.empty()) throw InvalidArgument("temperature grid is empty");
    for (std::size_t k = 0; k < t_over_omega.size(); ++k) {
        const double x = t_over_omega[k];
        if (!std::isfinite(x) || x < 0.0) throw InvalidArgument("temperature grid values must be finite and >= 0");
        if (k > 0 && !(x > t_over_omega[k - 1])) throw InvalidArgument("temperature grid must be strictly increasing");
    }

    std::vector<TemperaturePoint> out(t_over_omega.size());
    auto evaluate = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            ThermalFieldParams p = base;
            p.temperature = t_over_omega[k] * base.omega;
            out[k] = {t_over_omega[k], zeno_time_thermal(p, n_big).tau_z};
        }
    };

    const std::size_t workers = std::clamp<std::size_t>(threads, 1, out.size());
    if (workers == 1) {
        evaluate(0, out.size());
        return out;
    }
    // Contiguous chunks; every index is written by exactly one worker.
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        const std::size_t chunk = (out.size() + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(out.size(), begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(evaluate, begin, end);
        }
    }
    return out;
}

}  // namespace zeno
