#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fgchar {

enum class ErrorCode {
    InvalidInput,
    NotAssociative,
    NoIdentity,
    NoInverse,
    NotAPermutation,
    OrderCapExceeded,
    UnknownSpec,
    ParameterOutOfRange,
    ActionNotAutomorphism,
    ActionNotHomomorphism,
    NotNormal,
    TrivialGroup,
    ConductorOverflow,
    GroupMismatch,
    NotIrreducible,
    SubgroupNotContained,
    NotACharacter,
    NotFaithful,
    CenterNotPrimePower,
    HypothesisViolated,
    NotCharacterOfCenter,
    NotAbelian,
    CapExceeded,
    NotSemisimple,
    PreconditionViolated,
    CocycleIdentityFails,
    NotNormalized,
    InvalidCocycle,
    MuNotCentral,
    MuNotKernel,
    NoFaithfulCentralCharacter,
    SyntaxError,
    InternalSplitFailure,
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::NotAssociative: return "NotAssociative";
        case ErrorCode::NoIdentity: return "NoIdentity";
        case ErrorCode::NoInverse: return "NoInverse";
        case ErrorCode::NotAPermutation: return "NotAPermutation";
        case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
        case ErrorCode::UnknownSpec: return "UnknownSpec";
        case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorCode::ActionNotAutomorphism: return "ActionNotAutomorphism";
        case ErrorCode::ActionNotHomomorphism: return "ActionNotHomomorphism";
        case ErrorCode::NotNormal: return "NotNormal";
        case ErrorCode::TrivialGroup: return "TrivialGroup";
        case ErrorCode::ConductorOverflow: return "ConductorOverflow";
        case ErrorCode::GroupMismatch: return "GroupMismatch";
        case ErrorCode::NotIrreducible: return "NotIrreducible";
        case ErrorCode::SubgroupNotContained: return "SubgroupNotContained";
        case ErrorCode::NotACharacter: return "NotACharacter";
        case ErrorCode::NotFaithful: return "NotFaithful";
        case ErrorCode::CenterNotPrimePower: return "CenterNotPrimePower";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::NotCharacterOfCenter: return "NotCharacterOfCenter";
        case ErrorCode::NotAbelian: return "NotAbelian";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::NotSemisimple: return "NotSemisimple";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::CocycleIdentityFails: return "CocycleIdentityFails";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::InvalidCocycle: return "InvalidCocycle";
        case ErrorCode::MuNotCentral: return "MuNotCentral";
        case ErrorCode::MuNotKernel: return "MuNotKernel";
        case ErrorCode::NoFaithfulCentralCharacter: return "NoFaithfulCentralCharacter";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::InternalSplitFailure: return "InternalSplitFailure";
    }
    return "Unknown";
}

/// Every failure raised by the library. The message carries the witness
/// (element indices, triples, hypothesis name) when one exists.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), detail_(message) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace fgchar
