#pragma once

#include <stdexcept>
#include <string>

namespace norm0 {

enum class ErrorCode {
    InvalidArgument,
    SingularMatrix,
    OrientationReversing,
    CapExceeded,
    BudgetExceeded,
    NotExactDivisor,
    NotInNormalizer,
    ShiftNotInNormalizer,
    ParseError,
    UnknownGenerator,
    NotASubgroup,
    DecompositionFailed,
    IoError,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace norm0
