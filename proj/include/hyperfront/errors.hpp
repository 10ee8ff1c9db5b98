#pragma once

#include <stdexcept>
#include <string>

namespace hyperfront {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input: inconsistent parameters, wrong regime, malformed config.
/// The CLI maps these to exit code 1.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A computation that could not complete (blow-up, no convergence...).
/// The CLI maps these to exit code 2.
class NumericalError : public Error {
public:
    using Error::Error;
};

class EvaluationAtJump : public ValidationError {
public:
    explicit EvaluationAtJump(double u)
        : ValidationError("derivative of piecewise-affine reaction requested at its jump u=" +
                          std::to_string(u)),
          at(u) {}
    double at;
};

class NotEqualDepth : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class WrongRegime : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ConfigError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DegenerateWaveOperator : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class ComplexRoots : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NoSignChange : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NonConvergence : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class BlowUp : public NumericalError {
public:
    BlowUp(long step, const std::string& what)
        : NumericalError("non-finite value at step " + std::to_string(step) + ": " + what),
          step(step) {}
    long step;
};

class NoCrossing : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class MultipleCrossings : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class ZeroJump : public ValidationError {
public:
    using ValidationError::ValidationError;
};

}  // namespace hyperfront
