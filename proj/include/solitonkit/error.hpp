#pragma once

#include <stdexcept>
#include <string>

namespace solitonkit {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed expression text or spec file. Carries a 1-based position when known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0, int column = 0)
        : Error(format(what, line, column)), line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    static std::string format(const std::string& what, int line, int column) {
        if (line <= 0 && column <= 0) return what;
        return what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
    }

    int line_;
    int column_;
};

/// A point outside the chart domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Numeric evaluation failure: division by zero, log of a non-positive value,
/// a non-finite result or a singular metric.
class EvalError : public Error {
public:
    using Error::Error;
};

class SingularMetricError : public EvalError {
public:
    using EvalError::EvalError;
};

/// Shape mismatch between tensor operands, invalid slots, wrong dimension.
class ShapeError : public Error {
public:
    using Error::Error;
};

}  // namespace solitonkit
