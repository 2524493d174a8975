#include "ndp/errors.hpp"

namespace ndp {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::MalformedRotation: return "MalformedRotation";
        case ErrorCode::NonPlanarRotation: return "NonPlanarRotation";
        case ErrorCode::Unreachable: return "Unreachable";
        case ErrorCode::NoEnclosingCycle: return "NoEnclosingCycle";
        case ErrorCode::DepthUnavailable: return "DepthUnavailable";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::NotAForest: return "NotAForest";
        case ErrorCode::ViolationBoundExceeded: return "ViolationBoundExceeded";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::SearchExhausted: return "SearchExhausted";
        case ErrorCode::ShiftTooLarge: return "ShiftTooLarge";
        case ErrorCode::CannotExtend: return "CannotExtend";
        case ErrorCode::NotWellLinkedDetected: return "NotWellLinkedDetected";
        case ErrorCode::FaceTooClose: return "FaceTooClose";
        case ErrorCode::TooManyTerminals: return "TooManyTerminals";
        case ErrorCode::BadParams: return "BadParams";
        case ErrorCode::BadInput: return "BadInput";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace ndp
