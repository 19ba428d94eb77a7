#include "zeno/zeno_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace zeno {

namespace {

void require_time(double t, const char* what) {
    if (!std::isfinite(t) || t < 0.0) throw InvalidArgument(std::string(what) + " must be finite and >= 0");
}

void require_positive(double v, const char* what) {
    if (!std::isfinite(v) || !(v > 0.0)) throw InvalidArgument(std::string(what) + " must be finite and > 0");
}

}  // namespace

MeasurementSchedule::MeasurementSchedule(double tau_total, long long n_measurements)
    : tau_total_(tau_total), n_(n_measurements) {
    require_positive(tau_total, "tau_total");
    if (n_measurements < 1) throw InvalidArgument("n_measurements must be >= 1");
}

std::string_view to_string(ZenoMethod m) {
    switch (m) {
        case ZenoMethod::variance: return "variance";
        case ZenoMethod::geometric: return "geometric";
        case ZenoMethod::weak: return "weak";
        case ZenoMethod::thermal: return "thermal";
    }
    return "unknown";
}

double survival_probability_exact(const SystemParams& p, const PureState& s, double t) {
    require_time(t, "t");
    // Dividing by <s|s>^2 cancels the rounding left in a normalized state, so t = 0 gives exactly 1.
    const double norm_sq = std::real(inner(s, apply(Operator2::identity(), s)));
    const double amp = std::norm(inner(s, apply(propagator(p, t), s))) / (norm_sq * norm_sq);
    return std::clamp(amp, 0.0, 1.0);
}

Flagged<double> survival_probability_quadratic(double delta_h, double t) {
    require_time(t, "t");
    require_time(delta_h, "delta_h");
    const double x = delta_h * t;
    return {std::max(0.0, 1.0 - x * x), x < 1.0};
}

double energy_variance(const SystemParams& p, const PureState& s) {
    const Operator2 h = system_hamiltonian(p);
    const double mean = expectation(h, s).real();
    const double mean_sq = expectation(h * h, s).real();
    return std::sqrt(std::max(0.0, mean_sq - mean * mean));
}

ZenoEstimate zeno_time_variance(const SystemParams& p, const PureState& s) {
    const double dh = energy_variance(p, s);
    if (dh < 1e-12) throw DivergentZenoTime("energy eigenstate: delta_H = 0, Zeno time diverges");
    ZenoEstimate out;
    out.delta_h = dh;
    out.tau_z = 1.0 / dh;
    out.method = ZenoMethod::variance;
    return out;
}

double pulsed_survival_formula(double delta_h, const MeasurementSchedule& sched) {
    require_time(delta_h, "delta_h");
    const double x = delta_h * sched.tau_m();
    if (x >= 1.0) {
        throw RegimeError("pulsed survival formula needs delta_H tau/n < 1 (got " + std::to_string(x) + ")");
    }
    // log1p keeps 1 - x^2 accurate for the tiny intervals of large n.
    return std::exp(static_cast<double>(sched.n_measurements()) * std::log1p(-x * x));
}

double pulsed_survival_simulated(const SystemParams& p, const PureState& s,
                                 const MeasurementSchedule& sched) {
    const Operator2 step = propagator(p, sched.tau_m());
    double survival = 1.0;
    StateVector psi{s[0], s[1]};
    for (long long k = 0; k < sched.n_measurements(); ++k) {
        psi = apply(step, psi);
        survival *= std::norm(inner(s, psi));
        // collapse onto the survivor branch
        psi = {s[0], s[1]};
    }
    return survival;
}

Flagged<double> effective_exponential_survival(double tau, double tau_m, double tau_z) {
    require_time(tau, "tau");
    require_positive(tau_m, "tau_M");
    require_positive(tau_z, "tau_Z");
    return {std::exp(-tau * tau_m / (tau_z * tau_z)), tau_m < tau_z};
}

ZenoEstimate zeno_time_geometric(double tau_l, double tau_m) {
    require_positive(tau_l, "tau_L");
    require_positive(tau_m, "tau_M");
    ZenoEstimate out;
    out.tau_z = std::sqrt(tau_l * tau_m);
    out.tau_l = tau_l;
    out.tau_m = tau_m;
    out.method = ZenoMethod::geometric;
    return out;
}

}  // namespace zeno
