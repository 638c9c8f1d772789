#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace horadam {

/// Base of every error raised by the library. Callers that only need to
/// report a failure can catch this one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid constructor argument: zero denominator, zero p or q, both
/// initial terms zero.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Negative power of a singular matrix.
class SingularityError : public Error {
public:
    using Error::Error;
};

/// The basis-coefficient system has zero determinant.
class DegeneracyError : public Error {
public:
    using Error::Error;
};

/// Caller mixed incompatible inputs (e.g. sequences with different
/// recurrences, unknown identity variant).
class UsageError : public Error {
public:
    using Error::Error;
};

/// A lemma's three-term relation does not hold on the indices it touches.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

/// Text could not be parsed. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Evaluation of a parsed expression failed (unbound variable, unresolved
/// sequence, zero raised to a negative power, ...).
class EvalError : public Error {
public:
    using Error::Error;
};

}  // namespace horadam
