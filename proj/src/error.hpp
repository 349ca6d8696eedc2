#pragma once

#include <stdexcept>
#include <string>

namespace menuprobe {

// Error codes shared with the C API (see include/menuprobe/menuprobe.h).
enum class ErrorCode {
    Ok = 0,
    InvalidArgument = 1,
    DimensionMismatch = 2,
    IndexOutOfRange = 3,
    EmptyMenu = 4,
    BallOutsideSpace = 5,
    InfeasiblePoint = 6,
    DegenerateInstance = 7,
    AssumptionViolated = 8,
    AmbiguousMatch = 9,
    NoMatch = 10,
    EqualResponses = 11,
    DegenerateSpread = 12,
    NonpositiveScale = 13,
    CountJump = 14,
    IndistinguishableTypes = 15,
    RegionNotInterior = 16,
    PartialResult = 17,
    Parse = 18,
    Io = 19,
    UnknownType = 20,
    Internal = 21,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace menuprobe
