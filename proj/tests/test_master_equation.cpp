#include <doctest.h>

#include <cmath>
#include <random>

#include "zeno/errors.hpp"
#include "zeno/master_equation.hpp"

using namespace zeno;

namespace {

double temperature_for_occupation(double omega, double n) { return omega / std::log1p(1.0 / n); }

DensityMatrix random_density(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::normal_distribution<double> n;
    // mixture of a random pure state with the maximally mixed state
    const PureState s = PureState::normalized({n(rng), n(rng)}, {n(rng), n(rng)});
    const double w = u(rng);
    return DensityMatrix(w * projector_onto(s) + (1.0 - w) * 0.5 * Operator2::identity());
}

}  // namespace

TEST_CASE("lindblad generator structure") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const DensityMatrix rho = random_density(rng);
        const ThermalFieldParams p{0.05 + 0.2 * std::abs(u(rng)), 0.5 + std::abs(u(rng)), 2.0 * std::abs(u(rng))};
        const DriveParams d{{u(rng), u(rng)}};
        const Operator2 rhs = lindblad_rhs(rho, p, d);
        CHECK(std::abs(rhs.trace()) < 1e-12);
        CHECK(rhs.is_hermitian(1e-12));
    }
}

TEST_CASE("lindblad generator at zero temperature") {
    const ThermalFieldParams p{0.1, 1.0, 0.0};
    CHECK(lindblad_rhs(DensityMatrix::ground(), p, {}).max_abs() == 0.0);

    // A = 2 g^2 omega; D[sigma_-] |e><e| = 2|g><g| - 2|e><e|
    const Operator2 rhs = lindblad_rhs(DensityMatrix::excited(), p, {});
    const double a = 2.0 * 0.01;
    CHECK(rhs(0, 0).real() == doctest::Approx(-2.0 * a).epsilon(1e-14));
    CHECK(rhs(1, 1).real() == doctest::Approx(2.0 * a).epsilon(1e-14));
    CHECK(std::abs(rhs(0, 1)) == 0.0);
    const double dsz = (rhs * pauli(PauliAxis::z)).trace().real();
    CHECK(dsz == doctest::Approx(-8.0 * 0.01).epsilon(1e-14));
}

TEST_CASE("bloch equations follow from the master equation") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const DensityMatrix rho = random_density(rng);
        const ThermalFieldParams p{0.3 * std::abs(u(rng)), 0.5 + std::abs(u(rng)), 3.0 * std::abs(u(rng))};
        const DriveParams d{{u(rng), u(rng)}};
        const Operator2 drho = lindblad_rhs(rho, p, d);
        const BlochVector from_rho{(drho * pauli(PauliAxis::plus)).trace(), (drho * pauli(PauliAxis::minus)).trace(),
                                   (drho * pauli(PauliAxis::z)).trace().real()};
        const BlochVector direct = bloch_rhs(BlochVector::from_density(rho), p, d);
        CHECK(std::abs(direct.sp - from_rho.sp) < 1e-13);
        CHECK(std::abs(direct.sm - from_rho.sm) < 1e-13);
        CHECK(std::abs(direct.sz - from_rho.sz) < 1e-13);
    }
}

TEST_CASE("bloch right-hand side") {
    const double g = 0.1;
    const double t = temperature_for_occupation(1.0, 1.0);
    const ThermalFieldParams p{g, 1.0, t};

    CHECK(std::abs(bloch_rhs({0.0, 0.0, -1.0 / 3.0}, p, {}).sz) < 1e-15);
    // 4 g^2 omega (2N + 2) at N = 1
    CHECK(bloch_rhs({0.0, 0.0, 1.0}, p, {}).sz == doctest::Approx(-4.0 * g * g * 4.0).epsilon(1e-13));

    const BlochVector still = bloch_rhs({Complex(0.2, 0.1), Complex(0.2, -0.1), 0.4}, {0.0, 1.0, 2.0}, {{0.5, 0.5}});
    CHECK(std::abs(still.sp) == 0.0);
    CHECK(std::abs(still.sm) == 0.0);
    CHECK(still.sz == 0.0);
}

TEST_CASE("analytic sigma_z") {
    const ThermalFieldParams cold{0.1, 1.0, 0.0};
    CHECK(analytic_sigma_z(cold, 0.0, 0.7) == 0.7);
    CHECK(analytic_sigma_z(cold, 1e4, 1.0) == doctest::Approx(-1.0).epsilon(1e-15));
    const ThermalFieldParams warm{0.1, 1.0, temperature_for_occupation(1.0, 1.0)};
    CHECK(steady_state_sigma_z(warm) == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
    CHECK(analytic_sigma_z(warm, 1e4, 1.0) == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
    // mode does not change the relaxation rate
    ThermalFieldParams literal = warm;
    literal.mode = ThermalFactorMode::paper_literal;
    CHECK(analytic_sigma_z(literal, 2.0, 1.0) == analytic_sigma_z(warm, 2.0, 1.0));
}

TEST_CASE("integration without coupling is static") {
    const DensityMatrix rho0 = DensityMatrix::from_state(PureState::normalized(0.6, Complex(0.0, 0.8)));
    const ThermalFieldParams p{0.0, 1.0, 1.0};
    const Trajectory traj = integrate_master_equation(rho0, p, {}, {1e-3, 2.0, 100});
    CHECK(traj.states.size() == 21);
    for (const auto& rho : traj.states) CHECK((rho.matrix() - rho0.matrix()).max_abs() <= 1e-12);
}

TEST_CASE("integrated decay matches the closed form") {
    for (double n : {0.0, 1.0, 3.0}) {
        const ThermalFieldParams p{0.1, 1.0, n == 0.0 ? 0.0 : temperature_for_occupation(1.0, n)};
        const double gamma = 4.0 * 0.01 * (2.0 * n + 1.0);
        const IntegrationSettings s = default_integration_settings(p, {}, 1.0 / gamma, 50);
        const Trajectory traj = integrate_master_equation(DensityMatrix::excited(), p, {}, s);
        for (std::size_t k = 0; k < traj.states.size(); ++k) {
            const double sz = traj.states[k].expectation(pauli(PauliAxis::z)).real();
            CHECK(std::abs(sz - analytic_sigma_z(p, traj.times[k], 1.0)) < 1e-6);
            CHECK(std::abs(traj.states[k].matrix().trace() - 1.0) < 1e-9);
        }
        CHECK(traj.times.back() == doctest::Approx(1.0 / gamma));
    }
}

TEST_CASE("driven integration stays physical and matches the bloch route") {
    const ThermalFieldParams p{0.2, 1.0, 0.7};
    const DriveParams d{{0.8, -0.3}};
    const IntegrationSettings s = default_integration_settings(p, d, 30.0, 10);
    const Trajectory rho = integrate_master_equation(DensityMatrix::excited(), p, d, s);
    const BlochTrajectory bloch = integrate_bloch_equations(BlochVector::from_density(DensityMatrix::excited()), p, d, s);
    REQUIRE(rho.states.size() == bloch.states.size());
    for (std::size_t k = 0; k < rho.states.size(); ++k) {
        const BlochVector b = BlochVector::from_density(rho.states[k]);
        CHECK(std::abs(b.sp - bloch.states[k].sp) < 1e-8);
        CHECK(std::abs(b.sz - bloch.states[k].sz) < 1e-8);
        CHECK(std::abs(bloch.states[k].sm - std::conj(bloch.states[k].sp)) < 1e-10);
        CHECK(hermitian_eigenvalues(rho.states[k].matrix())[0] >= -1e-8);
    }
}

TEST_CASE("step size validation") {
    const ThermalFieldParams p{0.1, 1.0, 0.0};
    CHECK_THROWS_AS(integrate_master_equation(DensityMatrix::excited(), p, {}, {0.01, 1.0}), StepSizeError);
    CHECK_THROWS_AS(integrate_master_equation(DensityMatrix::excited(), p, {}, {0.0, 1.0}), StepSizeError);
    CHECK_THROWS_AS(integrate_master_equation(DensityMatrix::excited(), p, {}, {1e-3, -1.0}), StepSizeError);
    CHECK_THROWS_AS(integrate_master_equation(DensityMatrix::excited(), p, {}, {1e-3, 1.0, 0}), StepSizeError);
    CHECK(max_step(p, {}) == 1e-3);
    CHECK(max_step({2.0, 1.0, 0.0}, {}) == doctest::Approx(0.01 / 16.0));
    CHECK(max_step({0.1, 1.0, 0.0}, {{100.0, 0.0}}) == doctest::Approx(1e-3));
    CHECK(max_step({0.1, 1.0, 0.0}, {{1000.0, 0.0}}) == doctest::Approx(1e-4));
}
