#pragma once

#include <stdexcept>
#include <string>

namespace redvar {

enum class ErrorCode {
    BadInput,
    NotFiniteType,
    RankMismatch,
    GroupTooLarge,
    DimensionTooLarge,
    NotAdmissible,
    BadPair,
    InvalidTriple,
    IllDefinedRestriction,
    NotACocycle,
    ContextMismatch,
    OracleMismatch,
    NotAdmissibleLift,
    NotSaturated,
    BadGrading,
    OutOfSupport,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace redvar
