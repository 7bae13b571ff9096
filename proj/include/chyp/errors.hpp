#pragma once

#include <stdexcept>
#include <string>

namespace chyp {

enum class ErrorCode {
    ZeroVector,
    PointAtInfinity,
    BoundaryPoint,
    PositiveVector,
    NotInSU21,
    NotPositive,
    NonPositiveRadius,
    UnsupportedN,
    NoConvergence,
    InvalidWord,
    FixesInfinity,
    DegenerateTriple,
    Tangency,
    OpenCycle,
    NonSurface,
    InconsistentOrientation,
    CosetLimitExceeded,
    SearchBudgetExceeded,
    Io,
    Parse,
};

const char* to_string(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace chyp
