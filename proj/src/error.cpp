#include "bchrome/error.hpp"

namespace bchrome {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::GirthTooSmall: return "GirthTooSmall";
    case ErrorCode::NotInAnyBunch: return "NotInAnyBunch";
    case ErrorCode::NotInS2: return "NotInS2";
    case ErrorCode::BunchAlreadyColored: return "BunchAlreadyColored";
    case ErrorCode::HallFailure: return "HallFailure";
    case ErrorCode::NotTotal: return "NotTotal";
    case ErrorCode::CompletionFailed: return "CompletionFailed";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorCode::RepairStuck: return "RepairStuck";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::NoStrategyApplies: return "NoStrategyApplies";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::MalformedGraph6: return "MalformedGraph6";
    case ErrorCode::MalformedDimacs: return "MalformedDimacs";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::FamilyTooLarge: return "FamilyTooLarge";
    }
    return "Unknown";
}

} // namespace bchrome
