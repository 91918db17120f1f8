#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lplab {

enum class ErrorKind {
    InvalidParameter,
    InvalidInput,
    CapacityExceeded,
    DegenerateInput,
    Unsupported,
    NumericalBudgetExceeded,
    PreconditionViolated,
    IdenticalCurves,
    DegeneratePosition,
    ContractViolation,
    EmptyAfterPruning,
    NoCover,
    StallDetected,
    Io,
};

std::string_view to_string(ErrorKind kind);

// Every domain failure in the library is reported through this type; the CLI
// maps it to exit code 1 and a JSON error object.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace lplab
