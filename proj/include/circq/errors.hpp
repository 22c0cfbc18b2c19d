#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace circq {

enum class ErrorCode {
    ZeroVector,
    InvalidMetric,
    InvalidTolerance,
    DegenerateAngle,
    DomainError,
    BadSampleCounts,
    NonFinite,
    InvariantViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Raised by every kernel operation whose precondition fails. The code
/// identifies the failure class; what() carries a human-readable detail.
class GeometryError : public std::runtime_error {
public:
    GeometryError(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace circq
