#include "zeno/qm_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zeno/errors.hpp"

namespace zeno {

Operator2 Operator2::adjoint() const {
    return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3])};
}

double Operator2::max_abs() const {
    double out = 0.0;
    for (const auto& z : m_) out = std::max(out, std::abs(z));
    return out;
}

bool Operator2::is_finite() const {
    return std::all_of(m_.begin(), m_.end(), [](Complex z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

bool Operator2::is_hermitian(double tol) const { return (*this - adjoint()).max_abs() <= tol; }

bool Operator2::is_unitary(double tol) const {
    return (adjoint() * *this - identity()).max_abs() <= tol;
}

bool Operator2::is_projector(double tol) const {
    return is_hermitian(tol) && (*this * *this - *this).max_abs() <= tol;
}

Operator2& Operator2::operator+=(const Operator2& rhs) {
    for (std::size_t i = 0; i < 4; ++i) m_[i] += rhs.m_[i];
    return *this;
}

Operator2& Operator2::operator-=(const Operator2& rhs) {
    for (std::size_t i = 0; i < 4; ++i) m_[i] -= rhs.m_[i];
    return *this;
}

Operator2& Operator2::operator*=(Complex s) {
    for (auto& z : m_) z *= s;
    return *this;
}

Operator2 operator*(const Operator2& a, const Operator2& b) {
    return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
            a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
}

Operator2 commutator(const Operator2& a, const Operator2& b) { return a * b - b * a; }

// ---------------------------------------------------------------------------

PureState::PureState(Complex c0, Complex c1) : amp_{c0, c1} {
    if (!(std::isfinite(c0.real()) && std::isfinite(c0.imag()) && std::isfinite(c1.real()) &&
          std::isfinite(c1.imag()))) {
        throw InvalidArgument("state amplitudes must be finite");
    }
    if (std::abs(norm() - 1.0) > kMatrixTolerance) {
        throw InvalidArgument("state is not normalized (norm " + std::to_string(norm()) + ")");
    }
}

PureState PureState::normalized(Complex c0, Complex c1) {
    const double n = std::sqrt(std::norm(c0) + std::norm(c1));
    if (!(n > 0.0) || !std::isfinite(n)) throw InvalidArgument("cannot normalize a zero vector");
    return {c0 / n, c1 / n};
}

double PureState::norm() const { return std::sqrt(std::norm(amp_[0]) + std::norm(amp_[1])); }

StateVector apply(const Operator2& a, const StateVector& v) {
    return {a(0, 0) * v.c0 + a(0, 1) * v.c1, a(1, 0) * v.c0 + a(1, 1) * v.c1};
}

StateVector apply(const Operator2& a, const PureState& s) { return apply(a, StateVector{s[0], s[1]}); }

Complex inner(const PureState& bra, const StateVector& ket) {
    return std::conj(bra[0]) * ket.c0 + std::conj(bra[1]) * ket.c1;
}

Complex inner(const PureState& bra, const PureState& ket) {
    return inner(bra, StateVector{ket[0], ket[1]});
}

// ---------------------------------------------------------------------------

std::array<double, 2> hermitian_eigenvalues(const Operator2& m) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double half_gap = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
    const double mean = 0.5 * (a + d);
    return {mean - half_gap, mean + half_gap};
}

DensityMatrix::DensityMatrix(const Operator2& m) : DensityMatrix(checked(m, kMatrixTolerance, 1e-10)) {}

DensityMatrix DensityMatrix::checked(const Operator2& m, double structure_tol, double eigenvalue_tol) {
    if (!m.is_finite()) throw InvalidArgument("density matrix has non-finite entries");
    if (!m.is_hermitian(structure_tol)) throw InvalidArgument("density matrix is not Hermitian");
    if (std::abs(m.trace() - 1.0) > structure_tol) {
        throw InvalidArgument("density matrix trace differs from 1");
    }
    if (hermitian_eigenvalues(m)[0] < -eigenvalue_tol) {
        throw InvalidArgument("density matrix has a negative eigenvalue");
    }
    return {m, Unchecked{}};
}

DensityMatrix DensityMatrix::from_state(const PureState& s) {
    return DensityMatrix(projector_onto(s));
}

Complex DensityMatrix::expectation(const Operator2& a) const { return (m_ * a).trace(); }

// ---------------------------------------------------------------------------

void SystemParams::validate() const {
    if (!std::isfinite(omega) || !(omega > 0.0)) throw InvalidArgument("omega must be finite and > 0");
}

Operator2 pauli(PauliAxis axis) {
    using namespace std::complex_literals;
    switch (axis) {
        case PauliAxis::x: return {0.0, 1.0, 1.0, 0.0};
        case PauliAxis::y: return {0.0, -1i, 1i, 0.0};
        case PauliAxis::z: return Operator2::diagonal(1.0, -1.0);
        case PauliAxis::plus: return {0.0, 1.0, 0.0, 0.0};
        case PauliAxis::minus: return {0.0, 0.0, 1.0, 0.0};
    }
    throw InvalidArgument("unknown Pauli axis");
}

Operator2 system_hamiltonian(const SystemParams& p) {
    p.validate();
    return 0.5 * p.omega * pauli(PauliAxis::z);
}

Operator2 propagator(const SystemParams& p, double t) {
    p.validate();
    if (!std::isfinite(t)) throw InvalidArgument("propagation time must be finite");
    const double phase = 0.5 * p.omega * t;
    return Operator2::diagonal(std::polar(1.0, phase), std::polar(1.0, -phase));
}

PureState x_polarized_state() {
    const double h = 1.0 / std::sqrt(2.0);
    return {h, h};
}

Operator2 projector_onto(const PureState& s) {
    return {s[0] * std::conj(s[0]), s[0] * std::conj(s[1]), s[1] * std::conj(s[0]),
            s[1] * std::conj(s[1])};
}

Complex expectation(const Operator2& a, const PureState& s) { return inner(s, apply(a, s)); }

}  // namespace zeno
