#pragma once

// Exact 2x2 quantum mechanics in natural units (hbar = k_B = 1).
//
// Basis ordering is (|e>, |g>): sigma_z = diag(1, -1), so the first
// component is the upper level and sigma_+ = |e><g| raises |g> to |e>.

#include <array>
#include <complex>

namespace zeno {

using Complex = std::complex<double>;

/// Absolute tolerance for the matrix predicates (max-norm of the defect).
inline constexpr double kMatrixTolerance = 1e-12;

class Operator2 {
public:
    constexpr Operator2() = default;
    constexpr Operator2(Complex a00, Complex a01, Complex a10, Complex a11)
        : m_{a00, a01, a10, a11} {}

    static constexpr Operator2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static constexpr Operator2 zero() { return {}; }
    static constexpr Operator2 diagonal(Complex d0, Complex d1) { return {d0, 0.0, 0.0, d1}; }

    constexpr Complex operator()(int row, int col) const { return m_[2 * row + col]; }
    constexpr Complex& operator()(int row, int col) { return m_[2 * row + col]; }

    Operator2 adjoint() const;
    Complex trace() const { return m_[0] + m_[3]; }

    /// Largest entry modulus.
    double max_abs() const;

    bool is_finite() const;
    bool is_hermitian(double tol = kMatrixTolerance) const;
    bool is_unitary(double tol = kMatrixTolerance) const;
    bool is_projector(double tol = kMatrixTolerance) const;

    Operator2& operator+=(const Operator2& rhs);
    Operator2& operator-=(const Operator2& rhs);
    Operator2& operator*=(Complex s);

    friend Operator2 operator+(Operator2 a, const Operator2& b) { return a += b; }
    friend Operator2 operator-(Operator2 a, const Operator2& b) { return a -= b; }
    friend Operator2 operator*(Operator2 a, Complex s) { return a *= s; }
    friend Operator2 operator*(Complex s, Operator2 a) { return a *= s; }
    friend Operator2 operator*(const Operator2& a, const Operator2& b);
    friend bool operator==(const Operator2&, const Operator2&) = default;

private:
    std::array<Complex, 4> m_{};
};

/// [a, b] = ab - ba
Operator2 commutator(const Operator2& a, const Operator2& b);

/// Normalized two-component state vector.
class PureState {
public:
    /// Throws InvalidArgument unless |c0|^2 + |c1|^2 = 1 within kMatrixTolerance.
    PureState(Complex c0, Complex c1);

    /// Rescales an arbitrary nonzero vector onto the unit sphere.
    static PureState normalized(Complex c0, Complex c1);
    static PureState excited() { return {1.0, 0.0}; }
    static PureState ground() { return {0.0, 1.0}; }

    Complex operator[](int i) const { return amp_[i]; }
    double norm() const;

private:
    std::array<Complex, 2> amp_;
};

struct StateVector {
    Complex c0;
    Complex c1;
};

StateVector apply(const Operator2& a, const PureState& s);
StateVector apply(const Operator2& a, const StateVector& v);

/// <bra|ket>, conjugate-linear in the first argument.
Complex inner(const PureState& bra, const StateVector& ket);
Complex inner(const PureState& bra, const PureState& ket);

/// Hermitian, unit-trace, positive semidefinite 2x2 matrix.
class DensityMatrix {
public:
    /// Validates with the strict tolerances: Hermitian and trace within 1e-12,
    /// eigenvalues >= -1e-10.
    explicit DensityMatrix(const Operator2& m);

    /// Validates with caller-supplied tolerances; used for integrated frames.
    static DensityMatrix checked(const Operator2& m, double structure_tol, double eigenvalue_tol);

    static DensityMatrix from_state(const PureState& s);
    static DensityMatrix excited() { return from_state(PureState::excited()); }
    static DensityMatrix ground() { return from_state(PureState::ground()); }

    const Operator2& matrix() const { return m_; }
    Complex operator()(int r, int c) const { return m_(r, c); }

    /// tr(rho A)
    Complex expectation(const Operator2& a) const;

private:
    struct Unchecked {};
    DensityMatrix(const Operator2& m, Unchecked) : m_(m) {}
    Operator2 m_;
};

/// Eigenvalues of a Hermitian 2x2 matrix in ascending order.
std::array<double, 2> hermitian_eigenvalues(const Operator2& m);

struct SystemParams {
    double omega = 1.0;  ///< Rabi frequency

    /// Throws InvalidArgument unless omega is finite and positive.
    void validate() const;
};

enum class PauliAxis { x, y, z, plus, minus };

Operator2 pauli(PauliAxis axis);

/// (omega / 2) sigma_z
Operator2 system_hamiltonian(const SystemParams& p);

/// diag(e^{i omega t / 2}, e^{-i omega t / 2}), so that U^dagger(t) = U(-t).
/// This is exp(+iHt); survival probabilities and weak values of real-symmetric
/// selections do not depend on the sign of the phase.
Operator2 propagator(const SystemParams& p, double t);

/// (|e> + |g>) / sqrt(2), the +1 eigenstate of sigma_x.
PureState x_polarized_state();

/// |s><s|
Operator2 projector_onto(const PureState& s);

/// <s|A|s>
Complex expectation(const Operator2& a, const PureState& s);

}  // namespace zeno
