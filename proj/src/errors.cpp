#include "circq/errors.hpp"

namespace circq {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::InvalidMetric: return "InvalidMetric";
        case ErrorCode::InvalidTolerance: return "InvalidTolerance";
        case ErrorCode::DegenerateAngle: return "DegenerateAngle";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::BadSampleCounts: return "BadSampleCounts";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

} // namespace circq
