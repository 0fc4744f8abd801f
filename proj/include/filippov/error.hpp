#ifndef FILIPPOV_ERROR_HPP
#define FILIPPOV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace filippov {

enum class ErrorKind {
    ParseError,
    IndexOutOfRange,
    RepeatedIndex,
    DuplicateEntry,
    ArityMismatch,
    DimensionMismatch,
    SingularMatrix,
    LinearlyDependent,
    NotASubalgebra,
    NotAnIdeal,
    UnverifiedAlgebra,
    InternalSpanError,
    GradingViolation,
    RecheckFailed,
    DivisionByZero,
};

const char* to_string(ErrorKind kind);

/// Every library failure is reported through this one exception type; the
/// kind distinguishes input errors from violated mathematical preconditions.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace filippov

#endif
