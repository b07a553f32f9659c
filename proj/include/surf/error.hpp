#pragma once

#include <stdexcept>
#include <string>

namespace surf {

enum class ErrorCode {
    // element / subobject validation
    UnknownElement,
    ClosureViolation,
    BackgroundMismatch,
    TooLarge,
    // background construction
    DanglingReference,
    DuplicateId,
    NotAPartialOrder,
    UnknownLabel,
    PairOutsideBackground,
    BadParameters,
    // schemes and diagrams
    FixedSourceArrow,
    DuplicateName,
    SchemeMismatch,
    SquareFails,
    // reactions
    EmptyReactant,
    EmptyProduct,
    InhibitorCoreNotIncluded,
    // morphisms
    MonoRequired,
    NotStructurePreserving,
    NotInjective,
    NotAMorphism,
    // processes
    TooShort,
    BadCombination,
    // documents
    SyntaxError,
    SchemaError,
    VersionUnsupported,
};

const char* to_string(ErrorCode code);

/// Domain error. `witness` names the offending element, pair or arrow
/// where one exists.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, std::string witness = {})
        : std::runtime_error(std::string(to_string(code)) + ": " + message),
          code_(code),
          witness_(std::move(witness)) {}

    ErrorCode code() const { return code_; }
    const std::string& witness() const { return witness_; }

private:
    ErrorCode code_;
    std::string witness_;
};

} // namespace surf
