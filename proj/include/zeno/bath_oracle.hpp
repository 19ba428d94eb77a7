#pragma once

// Discretized Wigner-Weisskopf bath. A reference level at energy 0 couples
// with equal strength to 2N+1 bath levels at n * delta_E, n = -N..N. In the
// continuum limit the reference amplitude decays as exp(-gamma t) with
// gamma = pi kappa^2 / delta_E, up to the first recurrence at 2 pi / delta_E.

#include <cstddef>
#include <span>
#include <vector>

#include "zeno/qm_core.hpp"

namespace zeno {

struct BathDiscretization {
    long long n_side = 1;  ///< N; bath levels are indexed -N..N
    double delta_e = 1.0;  ///< level spacing
    double coupling = 0.0; ///< kappa, identical for every bath level

    /// Coupling for which the golden-rule amplitude decay rate equals gamma,
    /// with n_side chosen so that n_side * delta_e >= bandwidth.
    static BathDiscretization calibrated(double gamma, double delta_e, double bandwidth);

    /// kappa^2 = gamma delta_E / pi
    static double calibrated_coupling(double gamma, double delta_e);

    void validate() const;

    std::size_t bath_levels() const { return static_cast<std::size_t>(2 * n_side + 1); }
    double recurrence_time() const;
    double golden_rule_rate() const;
};

/// Exact spectral decomposition of the single-excitation Hamiltonian,
/// restricted to what the reference-level amplitude needs: eigenvalues and
/// the squared reference component of each eigenvector.
///
/// The Hamiltonian is an arrowhead matrix, so its eigenvalues are the roots
/// of the secular equation
///
///   lambda = kappa^2 sum_n 1 / (lambda - n delta_E)
///
/// with exactly one root between each pair of adjacent bath levels and one
/// beyond each band edge. Every root is bracketed and found by safeguarded
/// Newton iteration.
class BathSpectrum {
public:
    explicit BathSpectrum(const BathDiscretization& b);

    /// <0| exp(-iHt) |0>. Throws ConvergenceError beyond the recurrence time.
    Complex amplitude(double t) const;

    std::span<const double> eigenvalues() const { return eigenvalues_; }
    std::span<const double> weights() const { return weights_; }
    const BathDiscretization& discretization() const { return bath_; }

private:
    BathDiscretization bath_;
    std::vector<double> eigenvalues_;
    std::vector<double> weights_;
};

/// One-shot convenience wrapper around BathSpectrum.
Complex bath_amplitude_oracle(const BathDiscretization& b, double t);

}  // namespace zeno
