#pragma once

#include "zeno/errors.hpp"
#include "zeno/qm_core.hpp"
#include "zeno/zeno_dynamics.hpp"

namespace zeno {

/// Pre-selection of psi_i at t_i and post-selection of psi_f at t_f.
struct PostSelection {
    PureState psi_i;
    PureState psi_f;
    double t_i = 0.0;
    double t_f = 1.0;

    /// Throws InvalidArgument unless both times are finite and t_f > t_i.
    void validate() const;
};

/// Amplitude decay a_0(t) = exp(-gamma (t - t_i)) of the pre-selected state.
struct DecayModel {
    double gamma = 0.0;

    void validate() const;
};

/// Time-dependent weak value
///
///   <psi_f| U^dagger(t - t_f) A U(t - t_i) |psi_i> / <psi_f| U^dagger(t - t_f) U(t - t_i) |psi_i>
///
/// for t_i <= t <= t_f. Throws OrthogonalPostSelection when the denominator
/// modulus drops below 1e-12.
Complex weak_value(const Operator2& a, const PostSelection& sel, const SystemParams& p, double t);

/// Weak survival of the excited level pre- and post-selected in the same state:
///
///   e^{-gamma (t - t_i)} [1 - e^{-gamma (t_f - t)}] / [1 - e^{-gamma (t_f - t_i)}]
///
/// Exactly 1 at t_i and 0 at t_f; gamma = 0 returns the linear ramp limit.
double weak_survival(const DecayModel& d, double t_i, double t_f, double t);

/// 1 / (gamma + 2 / (t_f - t_i)); flagged once gamma (t_f - t_i) > 0.5, where
/// the small-dissipation approximation behind it degrades.
Flagged<double> weak_lifetime(const DecayModel& d, double t_i, double t_f);

/// sqrt(tau_M / (gamma + 2 / (N tau_M))) with the weak lifetime evaluated over
/// a total span of n_big measurement intervals.
ZenoEstimate weak_zeno_time(double gamma, double tau_m, long long n_big);

}  // namespace zeno
