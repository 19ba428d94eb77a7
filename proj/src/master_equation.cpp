#include "zeno/master_equation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "zeno/errors.hpp"
#include "zeno/rk4.hpp"

namespace zeno {

namespace {

struct Rates {
    double down;  ///< coefficient of D[sigma_-]
    double up;    ///< coefficient of D[sigma_+]
    Complex drive;
    double g;
};

Rates rates_for(const ThermalFieldParams& p, const DriveParams& d) {
    p.validate();
    d.validate();
    const double a = 2.0 * p.g * p.g * p.omega;
    const double n = planck_occupation(p.omega, p.temperature);
    return {a * (n + 1.0), a * n, d.lambda, p.g};
}

// 2 L rho L^dagger - L^dagger L rho - rho L^dagger L
Operator2 dissipator(const Operator2& l, const Operator2& rho) {
    const Operator2 ld = l.adjoint();
    const Operator2 ldl = ld * l;
    return 2.0 * (l * rho * ld) - ldl * rho - rho * ldl;
}

Operator2 generator(const Operator2& rho, const Rates& r) {
    static const Operator2 sp = pauli(PauliAxis::plus);
    static const Operator2 sm = pauli(PauliAxis::minus);
    Operator2 out = r.down * dissipator(sm, rho) + r.up * dissipator(sp, rho);
    if (r.drive != 0.0) {
        const Operator2 h = r.g * (r.drive * sp + std::conj(r.drive) * sm);
        out -= Complex(0.0, 1.0) * commutator(h, rho);
    }
    return out;
}

std::size_t step_count(const IntegrationSettings& s, double h_max) {
    if (!std::isfinite(s.t_end) || !(s.t_end > 0.0)) throw StepSizeError("t_end must be finite and > 0");
    if (!std::isfinite(s.step) || !(s.step > 0.0)) throw StepSizeError("step must be finite and > 0");
    if (s.step > h_max * (1.0 + 1e-12)) {
        throw StepSizeError("step " + std::to_string(s.step) + " exceeds the admissible " + std::to_string(h_max));
    }
    if (s.record_every < 1) throw StepSizeError("record_every must be >= 1");
    return static_cast<std::size_t>(std::ceil(s.t_end / s.step - 1e-9));
}

// Shared fixed-step driver. The last step is shortened to land on t_end.
template <typename State, typename Rhs, typename Check>
void integrate(State y, const IntegrationSettings& s, std::size_t n_steps, const Rhs& rhs,
               const Check& check, std::vector<double>& times, std::vector<State>& states) {
    times.push_back(0.0);
    states.push_back(y);
    for (std::size_t k = 1; k <= n_steps; ++k) {
        const double t_prev = static_cast<double>(k - 1) * s.step;
        const double t = k == n_steps ? s.t_end : static_cast<double>(k) * s.step;
        y = rk4_step(y, t - t_prev, rhs);
        check(y, t);
        if (k % s.record_every == 0 || k == n_steps) {
            times.push_back(t);
            states.push_back(y);
        }
    }
}

}  // namespace

void DriveParams::validate() const {
    if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag())) {
        throw InvalidArgument("drive amplitude must be finite");
    }
}

BlochVector BlochVector::from_density(const DensityMatrix& rho) {
    return {rho.expectation(pauli(PauliAxis::plus)), rho.expectation(pauli(PauliAxis::minus)),
            rho.expectation(pauli(PauliAxis::z)).real()};
}

double max_step(const ThermalFieldParams& p, const DriveParams& d) {
    p.validate();
    d.validate();
    double h = 0.001 / p.omega;
    const double gamma = 4.0 * p.g * p.g * p.omega * (2.0 * planck_occupation(p.omega, p.temperature) + 1.0);
    if (gamma > 0.0) h = std::min(h, 0.01 / gamma);
    const double drive = p.g * std::abs(d.lambda);
    if (drive > 0.0) h = std::min(h, 0.01 / drive);
    return h;
}

IntegrationSettings default_integration_settings(const ThermalFieldParams& p, const DriveParams& d,
                                                 double t_end, std::size_t record_every) {
    return {max_step(p, d), t_end, record_every};
}

Operator2 lindblad_rhs(const Operator2& rho, const ThermalFieldParams& p, const DriveParams& d) {
    return generator(rho, rates_for(p, d));
}

Operator2 lindblad_rhs(const DensityMatrix& rho, const ThermalFieldParams& p, const DriveParams& d) {
    return lindblad_rhs(rho.matrix(), p, d);
}

Trajectory integrate_master_equation(const DensityMatrix& rho0, const ThermalFieldParams& p,
                                     const DriveParams& d, const IntegrationSettings& s) {
    const Rates r = rates_for(p, d);
    const std::size_t n_steps = step_count(s, max_step(p, d));

    std::vector<double> times;
    std::vector<Operator2> frames;
    times.reserve(n_steps / s.record_every + 2);
    frames.reserve(n_steps / s.record_every + 2);

    auto rhs = [&r](const Operator2& m) { return generator(m, r); };
    auto check = [](const Operator2& m, double t) {
        const bool structure_ok = m.is_finite() && m.is_hermitian(1e-9) && std::abs(m.trace() - 1.0) <= 1e-9;
        if (!structure_ok || hermitian_eigenvalues(m)[0] < -1e-8) {
            throw PositivityViolation("density matrix left the state space at t = " + std::to_string(t));
        }
    };
    integrate(rho0.matrix(), s, n_steps, rhs, check, times, frames);

    Trajectory out;
    out.times = std::move(times);
    out.states.reserve(frames.size());
    for (const auto& m : frames) out.states.push_back(DensityMatrix::checked(m, 1e-9, 1e-8));
    return out;
}

BlochVector bloch_rhs(const BlochVector& b, const ThermalFieldParams& p, const DriveParams& d) {
    const Rates r = rates_for(p, d);
    const Complex i(0.0, 1.0);
    const double coherence_rate = r.down + r.up;       // 2 g^2 omega (2N+1)
    const double population_rate = 2.0 * coherence_rate;  // 4 g^2 omega (2N+1)
    const double pump = 2.0 * (r.down - r.up);        // 4 g^2 omega
    const Complex lam = r.drive;

    BlochVector out;
    out.sp = -coherence_rate * b.sp - i * r.g * std::conj(lam) * b.sz;
    out.sm = -coherence_rate * b.sm + i * r.g * lam * b.sz;
    out.sz = -population_rate * b.sz - pump - (2.0 * i * r.g * (lam * b.sp - std::conj(lam) * b.sm)).real();
    return out;
}

BlochTrajectory integrate_bloch_equations(const BlochVector& b0, const ThermalFieldParams& p,
                                          const DriveParams& d, const IntegrationSettings& s) {
    const std::size_t n_steps = step_count(s, max_step(p, d));
    BlochTrajectory out;
    auto rhs = [&](const BlochVector& b) { return bloch_rhs(b, p, d); };
    auto check = [](const BlochVector& b, double t) {
        if (!std::isfinite(b.sz) || std::abs(b.sz) > 1.0 + 1e-10) {
            throw PositivityViolation("<sigma_z> left [-1, 1] at t = " + std::to_string(t));
        }
    };
    integrate(b0, s, n_steps, rhs, check, out.times, out.states);
    return out;
}

double steady_state_sigma_z(const ThermalFieldParams& p) {
    p.validate();
    return -1.0 / (2.0 * planck_occupation(p.omega, p.temperature) + 1.0);
}

double analytic_sigma_z(const ThermalFieldParams& p, double t, double sz0) {
    p.validate();
    if (!std::isfinite(t) || t < 0.0) throw InvalidArgument("t must be finite and >= 0");
    const double two_n_plus_one = 2.0 * planck_occupation(p.omega, p.temperature) + 1.0;
    const double gamma = 4.0 * p.g * p.g * p.omega * two_n_plus_one;
    const double sz_inf = -1.0 / two_n_plus_one;
    return sz_inf + (sz0 - sz_inf) * std::exp(-gamma * t);
}

}  // namespace zeno
