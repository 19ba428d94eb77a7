#pragma once

namespace zeno {

/// One classical fourth-order Runge-Kutta step for an autonomous system.
/// State must support addition and multiplication by double.
template <typename State, typename Rhs>
State rk4_step(const State& y, double h, const Rhs& rhs) {
    const State k1 = rhs(y);
    const State k2 = rhs(y + k1 * (0.5 * h));
    const State k3 = rhs(y + k2 * (0.5 * h));
    const State k4 = rhs(y + k3 * h);
    return y + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
}

}  // namespace zeno
