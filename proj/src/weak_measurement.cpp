#include "zeno/weak_measurement.hpp"

#include <cmath>
#include <string>

namespace zeno {

namespace {

void check_window(double t_i, double t_f, double t) {
    if (!std::isfinite(t_i) || !std::isfinite(t_f) || !(t_f > t_i)) {
        throw InvalidArgument("selection window needs finite t_i < t_f");
    }
    if (!std::isfinite(t) || t < t_i || t > t_f) {
        throw InvalidArgument("t = " + std::to_string(t) + " lies outside [t_i, t_f]");
    }
}

}  // namespace

void PostSelection::validate() const {
    if (!std::isfinite(t_i) || !std::isfinite(t_f) || !(t_f > t_i)) {
        throw InvalidArgument("post-selection needs finite t_i < t_f");
    }
}

void DecayModel::validate() const {
    if (!std::isfinite(gamma) || gamma < 0.0) throw InvalidArgument("gamma must be finite and >= 0");
}

Complex weak_value(const Operator2& a, const PostSelection& sel, const SystemParams& p, double t) {
    sel.validate();
    check_window(sel.t_i, sel.t_f, t);
    const Operator2 back = propagator(p, t - sel.t_f).adjoint();
    const Operator2 forward = propagator(p, t - sel.t_i);
    const Complex denominator = inner(sel.psi_f, apply(back * forward, sel.psi_i));
    if (std::abs(denominator) < 1e-12) {
        throw OrthogonalPostSelection("post-selected state is orthogonal to the evolved pre-selection");
    }
    return inner(sel.psi_f, apply(back * a * forward, sel.psi_i)) / denominator;
}

double weak_survival(const DecayModel& d, double t_i, double t_f, double t) {
    d.validate();
    check_window(t_i, t_f, t);
    if (d.gamma == 0.0) return (t_f - t) / (t_f - t_i);
    // expm1 keeps both brackets accurate when gamma * span is small.
    const double remaining = -std::expm1(-d.gamma * (t_f - t));
    const double total = -std::expm1(-d.gamma * (t_f - t_i));
    return std::exp(-d.gamma * (t - t_i)) * remaining / total;
}

Flagged<double> weak_lifetime(const DecayModel& d, double t_i, double t_f) {
    d.validate();
    if (!std::isfinite(t_i) || !std::isfinite(t_f) || !(t_f > t_i)) {
        throw InvalidArgument("weak lifetime needs finite t_i < t_f");
    }
    const double span = t_f - t_i;
    return {1.0 / (d.gamma + 2.0 / span), d.gamma * span <= 0.5};
}

ZenoEstimate weak_zeno_time(double gamma, double tau_m, long long n_big) {
    if (!std::isfinite(tau_m) || !(tau_m > 0.0)) throw InvalidArgument("tau_M must be finite and > 0");
    if (n_big < 1) throw InvalidArgument("N must be >= 1");
    const DecayModel decay{gamma};
    decay.validate();

    // The selection window spans N measurement intervals.
    const double span = static_cast<double>(n_big) * tau_m;
    const double tau_l = weak_lifetime(decay, 0.0, span).value;

    ZenoEstimate out;
    out.tau_m = tau_m;
    out.tau_l = tau_l;
    out.tau_z = std::sqrt(tau_m / (gamma + 2.0 / span));
    out.method = ZenoMethod::weak;
    return out;
}

}  // namespace zeno
