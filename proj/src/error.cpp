#include "surf/error.hpp"

namespace surf {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::ClosureViolation: return "ClosureViolation";
    case ErrorCode::BackgroundMismatch: return "BackgroundMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DanglingReference: return "DanglingReference";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::PairOutsideBackground: return "PairOutsideBackground";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::FixedSourceArrow: return "FixedSourceArrow";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::SchemeMismatch: return "SchemeMismatch";
    case ErrorCode::SquareFails: return "SquareFails";
    case ErrorCode::EmptyReactant: return "EmptyReactant";
    case ErrorCode::EmptyProduct: return "EmptyProduct";
    case ErrorCode::InhibitorCoreNotIncluded: return "InhibitorCoreNotIncluded";
    case ErrorCode::MonoRequired: return "MonoRequired";
    case ErrorCode::NotStructurePreserving: return "NotStructurePreserving";
    case ErrorCode::NotInjective: return "NotInjective";
    case ErrorCode::NotAMorphism: return "NotAMorphism";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::BadCombination: return "BadCombination";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::VersionUnsupported: return "VersionUnsupported";
    }
    return "Unknown";
}

} // namespace surf
