#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bchrome {

enum class ErrorCode {
    SelfLoop,
    VertexOutOfRange,
    GirthTooSmall,
    NotInAnyBunch,
    NotInS2,
    BunchAlreadyColored,
    HallFailure,
    NotTotal,
    CompletionFailed,
    PreconditionViolated,
    InternalInvariantViolation,
    RepairStuck,
    ConstructionFailed,
    NoStrategyApplies,
    GenerationFailed,
    InvalidParameter,
    MalformedGraph6,
    MalformedDimacs,
    SchemaViolation,
    FamilyTooLarge,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised when a bunch cannot be colored bijectively; `violator` is a set of
/// positions inside the bunch whose lists jointly offer fewer colors than
/// there are positions.
class HallFailure : public Error {
public:
    HallFailure(const std::string& what, std::vector<int> violator)
        : Error(ErrorCode::HallFailure, what), violator(std::move(violator))
    {
    }

    std::vector<int> violator;
};

/// A step of the two-bunch ordering found no vertex where one must exist.
/// Inputs that trigger this are counterexample candidates, so the full step
/// log travels with the exception.
class ConstructionFailed : public Error {
public:
    ConstructionFailed(std::string step, std::vector<std::string> log)
        : Error(ErrorCode::ConstructionFailed, "step '" + step + "'"),
          step(std::move(step)),
          log(std::move(log))
    {
    }

    std::string step;
    std::vector<std::string> log;
};

} // namespace bchrome
