#pragma once

#include <optional>
#include <string_view>

#include "zeno/errors.hpp"
#include "zeno/qm_core.hpp"

namespace zeno {

/// n equally spaced instantaneous measurements at tau/n, 2tau/n, ..., tau.
class MeasurementSchedule {
public:
    /// Throws InvalidArgument unless tau_total > 0 and n_measurements >= 1.
    MeasurementSchedule(double tau_total, long long n_measurements);

    double tau_total() const { return tau_total_; }
    long long n_measurements() const { return n_; }
    double tau_m() const { return tau_total_ / static_cast<double>(n_); }

private:
    double tau_total_;
    long long n_;
};

enum class ZenoMethod { variance, geometric, weak, thermal };

std::string_view to_string(ZenoMethod m);

/// Timescales produced by one Zeno-time formula. Fields the formula does not
/// touch stay empty.
struct ZenoEstimate {
    std::optional<double> delta_h;
    double tau_z = 0.0;
    std::optional<double> tau_m;
    std::optional<double> tau_l;
    ZenoMethod method = ZenoMethod::variance;
};

/// |<s|U(t)|s>|^2
double survival_probability_exact(const SystemParams& p, const PureState& s, double t);

/// max(0, 1 - (delta_h t)^2). Flagged out of regime once delta_h t >= 1.
Flagged<double> survival_probability_quadratic(double delta_h, double t);

/// Energy uncertainty sqrt(<H^2> - <H>^2) of s under the system Hamiltonian.
double energy_variance(const SystemParams& p, const PureState& s);

/// tau_Z = 1 / delta_H. Throws DivergentZenoTime for energy eigenstates.
ZenoEstimate zeno_time_variance(const SystemParams& p, const PureState& s);

/// [1 - (delta_h tau/n)^2]^n. Throws RegimeError when delta_h tau/n >= 1.
double pulsed_survival_formula(double delta_h, const MeasurementSchedule& sched);

/// Brute-force pulsed survival: exact propagation over each interval followed
/// by a projective check against s; survivor probabilities multiply.
double pulsed_survival_simulated(const SystemParams& p, const PureState& s,
                                 const MeasurementSchedule& sched);

/// exp(-tau tau_M / tau_Z^2). Out of regime when tau_M >= tau_Z.
Flagged<double> effective_exponential_survival(double tau, double tau_m, double tau_z);

/// tau_Z = sqrt(tau_L tau_M)
ZenoEstimate zeno_time_geometric(double tau_l, double tau_m);

}  // namespace zeno
