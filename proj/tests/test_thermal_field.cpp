#include <doctest.h>

#include <cmath>
#include <vector>

#include "zeno/temperature_sweep.hpp"
#include "zeno/thermal_field.hpp"
#include "zeno/weak_measurement.hpp"

using namespace zeno;

namespace {

constexpr ThermalFactorMode kModes[] = {ThermalFactorMode::paper_literal, ThermalFactorMode::derived_coth};

// Temperature at which the Planck occupation equals n.
double temperature_for_occupation(double omega, double n) { return omega / std::log1p(1.0 / n); }

}  // namespace

TEST_CASE("planck occupation") {
    CHECK(planck_occupation(1.0, 0.0) == 0.0);
    CHECK(planck_occupation(1.0, 1.0 / std::log(2.0)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(planck_occupation(1.0, 100.0) == doctest::Approx(100.0 - 0.5).epsilon(1e-3));
    CHECK(planck_occupation(2.0, 1e-3) == 0.0);
    CHECK_THROWS_AS(planck_occupation(0.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(planck_occupation(1.0, -1.0), InvalidArgument);
}

TEST_CASE("thermal factor modes") {
    for (ThermalFactorMode m : kModes) CHECK(thermal_factor({0.1, 1.0, 0.0, m}) == 1.0);

    // omega / 2T = ln 3
    const double t = 1.0 / (2.0 * std::log(3.0));
    CHECK(thermal_factor({0.1, 1.0, t, ThermalFactorMode::derived_coth}) == doctest::Approx(1.25).epsilon(1e-14));
    CHECK(thermal_factor({0.1, 1.0, t, ThermalFactorMode::paper_literal}) == doctest::Approx(1.5625).epsilon(1e-14));
    // coth identity
    for (double temp : {0.05, 0.3, 1.0, 7.0}) {
        CHECK(thermal_factor({0.1, 2.0, temp, ThermalFactorMode::derived_coth}) ==
              doctest::Approx(1.0 / std::tanh(2.0 / (2.0 * temp))).epsilon(1e-13));
    }
}

TEST_CASE("thermal decay rate") {
    CHECK(gamma_thermal({0.0, 1.0, 3.0}) == 0.0);
    CHECK(gamma_thermal({0.1, 1.0, 0.0}) == doctest::Approx(0.04).epsilon(1e-15));
    const double t = temperature_for_occupation(1.0, 1.0);
    CHECK(gamma_thermal({0.2, 1.0, t, ThermalFactorMode::derived_coth}) == doctest::Approx(12.0 * 0.04).epsilon(1e-13));
    CHECK_THROWS_AS(gamma_thermal({-0.1, 1.0, 0.0}), InvalidArgument);
}

TEST_CASE("thermal Zeno time") {
    const ZenoEstimate e = zeno_time_thermal({0.1, 1.0, 0.0, ThermalFactorMode::paper_literal}, 100);
    CHECK(e.tau_z == doctest::Approx(4.0825).epsilon(2.5e-5));
    CHECK(e.tau_z == doctest::Approx(std::sqrt(50.0 / 3.0)).epsilon(1e-14));
    CHECK(e.method == ZenoMethod::thermal);
    CHECK(*e.tau_m == 1.0);

    for (ThermalFactorMode m : kModes) {
        for (double g : {0.0, 0.05, 0.1, 0.3}) {
            for (double omega : {0.5, 1.0, 4.0}) {
                for (double temp : {0.0, 0.2, 1.0, 5.0}) {
                    for (long long n : {1LL, 100LL, 100000LL}) {
                        const ThermalFieldParams p{g, omega, temp, m};
                        const double via_weak = weak_zeno_time(gamma_thermal(p), measurement_time_for(omega), n).tau_z;
                        CHECK(std::abs(zeno_time_thermal(p, n).tau_z - via_weak) < 1e-12);
                    }
                }
                CHECK(std::abs(zeno_time_thermal({g, omega, 0.0, m}, 100).tau_z -
                               zero_temperature_zeno_time(omega, g, 100)) < 1e-12);
            }
        }
    }
}

TEST_CASE("quasi-continuous limit") {
    CHECK(quasi_continuous_zeno_limit(1.0, 0.1) == doctest::Approx(5.0).epsilon(1e-15));
    const double big_n = zeno_time_thermal({0.1, 1.0, 0.0}, 100'000'000).tau_z;
    CHECK(std::abs(big_n - 5.0) / 5.0 < 1e-3);

    // strictly increasing in N with the limit as supremum
    double previous = 0.0;
    for (long long n = 1; n <= 1'000'000'000; n *= 10) {
        const double tau = zeno_time_thermal({0.1, 1.0, 0.3}, n).tau_z;
        CHECK(tau > previous);
        CHECK(tau < quasi_continuous_zeno_limit(1.0, 0.1));
        previous = tau;
    }
    CHECK_THROWS_AS(quasi_continuous_zeno_limit(1.0, 0.0), DivergentZenoTime);
}

TEST_CASE("temperature sweep") {
    std::vector<double> grid;
    for (int k = 0; k <= 50; ++k) grid.push_back(0.1 * k);

    for (ThermalFactorMode m : kModes) {
        const auto sweep = temperature_sweep({0.1, 1.0, 0.0, m}, 100, grid);
        REQUIRE(sweep.size() == grid.size());
        CHECK(std::abs(sweep.front().tau_z - zero_temperature_zeno_time(1.0, 0.1, 100)) < 1e-12);
        for (std::size_t k = 1; k < sweep.size(); ++k) CHECK(sweep[k].tau_z < sweep[k - 1].tau_z);

        const auto threaded = temperature_sweep({0.1, 1.0, 0.0, m}, 100, grid, 4);
        for (std::size_t k = 0; k < sweep.size(); ++k) CHECK(threaded[k].tau_z == sweep[k].tau_z);
    }

    // High temperature: coth(omega/2T) ~ 2T/omega drives tau_Z to zero.
    const std::vector<double> hot{1e2, 1e4, 1e8};
    const auto cold_end = temperature_sweep({0.1, 1.0, 0.0}, 100, hot);
    CHECK(cold_end.back().tau_z < 1e-2 * cold_end.front().tau_z);

    const auto decoupled = temperature_sweep({0.0, 1.0, 0.0}, 100, grid);
    for (const auto& pt : decoupled) CHECK(pt.tau_z == doctest::Approx(std::sqrt(50.0)).epsilon(1e-15));

    const std::vector<double> bad{0.0, 0.5, 0.5};
    CHECK_THROWS_AS(temperature_sweep({0.1, 1.0, 0.0}, 100, bad), InvalidArgument);
    const std::vector<double> negative{-0.1, 0.5};
    CHECK_THROWS_AS(temperature_sweep({0.1, 1.0, 0.0}, 100, negative), InvalidArgument);
}
