#pragma once

#include <stdexcept>
#include <string>

namespace verlinde {

/// Base class for every failure raised by the computation kernel.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inversion of zero or of a non-unit (series with vanishing constant term, ...).
class DivisionByZero : public DomainError {
public:
    using DomainError::DomainError;
};

/// A precondition on the input of an operation does not hold.
class PreconditionError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Evaluation at a singular point (u = 0, u = +-1, singular Newton derivative).
class SingularPoint : public DomainError {
public:
    using DomainError::DomainError;
};

/// An internal identity that must hold exactly did not (residual, closed form).
class ConsistencyError : public DomainError {
public:
    using DomainError::DomainError;
};

} // namespace verlinde
