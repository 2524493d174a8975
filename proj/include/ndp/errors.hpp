#ifndef NDP_ERRORS_HPP
#define NDP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ndp {

enum class ErrorCode {
    MalformedRotation,
    NonPlanarRotation,
    Unreachable,
    NoEnclosingCycle,
    DepthUnavailable,
    PreconditionViolated,
    NotAForest,
    ViolationBoundExceeded,
    TooLarge,
    SearchExhausted,
    ShiftTooLarge,
    CannotExtend,
    NotWellLinkedDetected,
    FaceTooClose,
    TooManyTerminals,
    BadParams,
    BadInput,
    Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

// Internal consistency checks that must hold regardless of build type.
inline void require(bool cond, ErrorCode code, const std::string& what) {
    if (!cond) fail(code, what);
}

}  // namespace ndp

#endif
