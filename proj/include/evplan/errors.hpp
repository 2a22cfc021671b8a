#pragma once

#include <stdexcept>
#include <string>

namespace evplan {

enum class ErrorKind {
    ParseError,
    InvalidArgument,
    IllegalTraversal,
    IllegalRecharge,
    ChargeOutOfRange,
    DimensionMismatch,
    NegativeCycleDetected,
    NotConverged,
    BudgetExceeded,
    WitnessUnavailable,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    // True for failures of the computation itself, as opposed to bad
    // input or usage; the CLI maps these to a distinct exit status.
    bool is_solver_error() const {
        switch (kind_) {
        case ErrorKind::NegativeCycleDetected:
        case ErrorKind::NotConverged:
        case ErrorKind::BudgetExceeded:
        case ErrorKind::WitnessUnavailable:
        case ErrorKind::IllegalTraversal:
        case ErrorKind::IllegalRecharge:
        case ErrorKind::ChargeOutOfRange:
            return true;
        default:
            return false;
        }
    }

  private:
    ErrorKind kind_;
};

class ParseError : public Error {
  public:
    ParseError(int line, const std::string& message)
        : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    int line() const { return line_; }

  private:
    int line_;
};

}  // namespace evplan
