#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>

#include "zeno/bath_oracle.hpp"
#include "zeno/errors.hpp"

using namespace zeno;

namespace {

// Dense reference: full Hamiltonian, LAPACK-style symmetric eigensolver.
Complex dense_amplitude(const BathDiscretization& b, double t) {
    const auto levels = static_cast<Eigen::Index>(b.bath_levels());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(levels + 1, levels + 1);
    for (Eigen::Index k = 0; k < levels; ++k) {
        h(k + 1, k + 1) = static_cast<double>(k - b.n_side) * b.delta_e;
        h(0, k + 1) = b.coupling;
        h(k + 1, 0) = b.coupling;
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    Complex amp = 0.0;
    for (Eigen::Index k = 0; k < h.rows(); ++k) {
        const double w = es.eigenvectors()(0, k) * es.eigenvectors()(0, k);
        amp += w * std::polar(1.0, -es.eigenvalues()(k) * t);
    }
    return amp;
}

}  // namespace

TEST_CASE("calibration") {
    const BathDiscretization b = BathDiscretization::calibrated(0.1, 0.005, 5.0);
    CHECK(b.n_side == 1000);
    CHECK(b.bath_levels() == 2001);
    CHECK(b.golden_rule_rate() == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(b.recurrence_time() == doctest::Approx(2.0 * 3.141592653589793 / 0.005));
    CHECK_THROWS_AS(BathDiscretization::calibrated(0.1, 0.0, 5.0), InvalidArgument);
    CHECK_THROWS_AS(BathDiscretization::calibrated(0.1, 0.005, -1.0), InvalidArgument);
}

TEST_CASE("secular solver agrees with dense diagonalization") {
    for (long long n : {1LL, 5LL, 60LL}) {
        for (double kappa : {0.01, 0.2, 3.0}) {
            BathDiscretization b{n, 0.07, kappa};
            const BathSpectrum spectrum(b);
            CHECK(spectrum.eigenvalues().size() == static_cast<std::size_t>(2 * n + 2));
            double total = 0.0;
            for (double w : spectrum.weights()) total += w;
            CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
            for (double t : {0.0, 0.3, 4.0, 40.0}) {
                CHECK(std::abs(spectrum.amplitude(t) - dense_amplitude(b, t)) < 1e-10);
            }
        }
    }
}

TEST_CASE("trivial amplitudes") {
    const BathDiscretization b = BathDiscretization::calibrated(0.1, 0.005, 5.0);
    CHECK(std::abs(bath_amplitude_oracle(b, 0.0) - 1.0) < 1e-12);

    BathDiscretization decoupled = b;
    decoupled.coupling = 0.0;
    for (double t : {0.0, 3.0, 100.0}) CHECK(bath_amplitude_oracle(decoupled, t) == Complex(1.0, 0.0));
}

TEST_CASE("continuum limit reproduces exponential decay") {
    const double gamma = 0.1;
    const BathSpectrum spectrum(BathDiscretization::calibrated(gamma, gamma / 20.0, 50.0 * gamma));
    CHECK(std::abs(std::abs(spectrum.amplitude(1.0 / gamma)) - std::exp(-1.0)) / std::exp(-1.0) < 0.02);

    double previous = 1.0;
    double max_rel = 0.0;
    for (int k = 0; k <= 400; ++k) {
        const double t = 2.0 / gamma * k / 400.0;
        const double amp = std::abs(spectrum.amplitude(t));
        max_rel = std::max(max_rel, std::abs(amp - std::exp(-gamma * t)) / std::exp(-gamma * t));
        // modulus decays monotonically up to small ripple
        CHECK(amp <= previous * 1.02);
        previous = amp;
    }
    CHECK(max_rel < 0.02);
}

TEST_CASE("recurrence horizon") {
    const BathDiscretization b{50, 0.1, 0.05};
    const BathSpectrum spectrum(b);
    CHECK_NOTHROW(spectrum.amplitude(b.recurrence_time()));
    CHECK_THROWS_AS(spectrum.amplitude(1.001 * b.recurrence_time()), ConvergenceError);
    CHECK_THROWS_AS(spectrum.amplitude(-1.0), InvalidArgument);
}
