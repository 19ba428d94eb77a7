#pragma once

#include <stdexcept>
#include <string>

namespace zeno {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter violates a physical or structural invariant.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A numerical procedure cannot produce a meaningful result for the inputs
/// (regime violation, divergence, convergence failure).
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Energy eigenstates never decay, so the variance Zeno time is infinite.
class DivergentZenoTime : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// A closed-form approximation was evaluated outside its validity window.
class RegimeError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Weak value denominator vanishes.
class OrthogonalPostSelection : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class ConvergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class StepSizeError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// An integrated density matrix left the physical state space.
class PositivityViolation : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class InsufficientSpan : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Raised by the rate fit when the series shows no decay at all.
class NoDecay : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// A value paired with whether it was produced inside the validity window of
/// the approximation that computed it.
template <typename T>
struct Flagged {
    T value;
    bool in_regime = true;
};

}  // namespace zeno
