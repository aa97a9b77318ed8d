#pragma once

#include <stdexcept>
#include <string>

namespace hdg {

enum class ErrKind {
    NotAssociative,
    NoIdentity,
    NoInverse,
    NotClosed,
    NotNormal,
    NotAHomomorphism,
    NotAnAction,
    NotAModule,
    OrderCapExceeded,
    ShapeMismatch,
    ElementNotInMoore,
    InsufficientTruncation,
    HypothesisFailed,
    RequiresTrivialM,
    AxiomFailure,
    ConstructionInconsistent,
    SimplicialInvalid,
    SyntaxError,
    UnresolvedReference,
    BadTableShape,
    GroupAxiomFailure,
};

inline const char* err_kind_name(ErrKind k) {
    switch (k) {
        case ErrKind::NotAssociative: return "NotAssociative";
        case ErrKind::NoIdentity: return "NoIdentity";
        case ErrKind::NoInverse: return "NoInverse";
        case ErrKind::NotClosed: return "NotClosed";
        case ErrKind::NotNormal: return "NotNormal";
        case ErrKind::NotAHomomorphism: return "NotAHomomorphism";
        case ErrKind::NotAnAction: return "NotAnAction";
        case ErrKind::NotAModule: return "NotAModule";
        case ErrKind::OrderCapExceeded: return "OrderCapExceeded";
        case ErrKind::ShapeMismatch: return "ShapeMismatch";
        case ErrKind::ElementNotInMoore: return "ElementNotInMoore";
        case ErrKind::InsufficientTruncation: return "InsufficientTruncation";
        case ErrKind::HypothesisFailed: return "HypothesisFailed";
        case ErrKind::RequiresTrivialM: return "RequiresTrivialM";
        case ErrKind::AxiomFailure: return "AxiomFailure";
        case ErrKind::ConstructionInconsistent: return "ConstructionInconsistent";
        case ErrKind::SimplicialInvalid: return "SimplicialInvalid";
        case ErrKind::SyntaxError: return "SyntaxError";
        case ErrKind::UnresolvedReference: return "UnresolvedReference";
        case ErrKind::BadTableShape: return "BadTableShape";
        case ErrKind::GroupAxiomFailure: return "GroupAxiomFailure";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrKind kind, std::string message)
        : std::runtime_error(std::string(err_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrKind kind() const { return kind_; }

private:
    ErrKind kind_;
};

}  // namespace hdg
