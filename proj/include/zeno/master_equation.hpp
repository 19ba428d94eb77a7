#pragma once

// Interaction-picture master equation of the thermally coupled atom and the
// equivalent equations of motion for <sigma_+>, <sigma_->, <sigma_z>.
//
// With A = 2 g^2 omega and N the Planck occupation at omega,
//
//   d rho/dt = A (N+1) D[sigma_-] rho + A N D[sigma_+] rho
//              - i g [Lambda sigma_+ + Lambda^* sigma_-, rho],
//   D[L] rho = 2 L rho L^dagger - L^dagger L rho - rho L^dagger L.
//
// The populations then relax at 2A(2N+1) = 4 g^2 omega (2N+1) and the
// coherences at A(2N+1).

#include <cstddef>
#include <vector>

#include "zeno/qm_core.hpp"
#include "zeno/thermal_field.hpp"

namespace zeno {

/// Coherent drive B(t) -> B(t) + Lambda e^{i omega t} + c.c.
struct DriveParams {
    Complex lambda{0.0, 0.0};

    void validate() const;
};

struct BlochVector {
    Complex sp;  ///< <sigma_+>
    Complex sm;  ///< <sigma_->
    double sz = 0.0;

    static BlochVector from_density(const DensityMatrix& rho);

    friend BlochVector operator+(const BlochVector& a, const BlochVector& b) {
        return {a.sp + b.sp, a.sm + b.sm, a.sz + b.sz};
    }
    friend BlochVector operator*(const BlochVector& a, double s) { return {a.sp * s, a.sm * s, a.sz * s}; }
};

struct IntegrationSettings {
    double step = 1e-3;
    double t_end = 1.0;
    std::size_t record_every = 1;  ///< store every k-th step (the final state is always stored)
};

/// Largest admissible step: min(0.001 / omega, 0.01 / gamma, 0.01 / (g |Lambda|)).
double max_step(const ThermalFieldParams& p, const DriveParams& d);

/// Settings using max_step for the given horizon.
IntegrationSettings default_integration_settings(const ThermalFieldParams& p, const DriveParams& d,
                                                 double t_end, std::size_t record_every = 1);

/// d rho / dt. Traceless and Hermiticity-preserving.
Operator2 lindblad_rhs(const DensityMatrix& rho, const ThermalFieldParams& p, const DriveParams& d);

/// Same generator applied to an arbitrary matrix (intermediate RK stages).
Operator2 lindblad_rhs(const Operator2& rho, const ThermalFieldParams& p, const DriveParams& d);

struct Trajectory {
    std::vector<double> times;
    std::vector<DensityMatrix> states;
};

/// Fixed-step RK4 solution of the master equation. Every step is checked:
/// trace and Hermiticity within 1e-9, eigenvalues >= -1e-8. Throws
/// StepSizeError for inadmissible settings and PositivityViolation when a
/// frame leaves the state space.
Trajectory integrate_master_equation(const DensityMatrix& rho0, const ThermalFieldParams& p,
                                     const DriveParams& d, const IntegrationSettings& s);

/// d(<sigma_+>, <sigma_->, <sigma_z>) / dt.
BlochVector bloch_rhs(const BlochVector& b, const ThermalFieldParams& p, const DriveParams& d);

struct BlochTrajectory {
    std::vector<double> times;
    std::vector<BlochVector> states;
};

BlochTrajectory integrate_bloch_equations(const BlochVector& b0, const ThermalFieldParams& p,
                                          const DriveParams& d, const IntegrationSettings& s);

/// Undriven solution sz_inf + (sz0 - sz_inf) e^{-gamma t} with
/// gamma = 4 g^2 omega (2N+1) and sz_inf = -1 / (2N+1). Independent of p.mode.
double analytic_sigma_z(const ThermalFieldParams& p, double t, double sz0);

/// Thermal steady state -1 / (2N+1) of <sigma_z>.
double steady_state_sigma_z(const ThermalFieldParams& p);

}  // namespace zeno
