#pragma once

#include <stdexcept>
#include <string>

namespace lmforge {

enum class ErrorKind {
    ZeroSpecialization,
    IndexOutOfRange,
    ArityMismatch,
    NotInIdeal,
    LevelMismatch,
    RelationViolation,
    HorizonExceeded,
    RingMismatch,
    HorizonMismatch,
    SystemUnverified,
    HorizonExhausted,
    IncompatibleRanks,
    NotTrivialSigma,
    NaturalityFailure,
    StabilizationDescentFailure,
    NonIntegerMultiplicity,
    WeakModeRequired,
    ParseError,
    Singular,
    Unsupported,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::ZeroSpecialization: return "ZeroSpecialization";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::NotInIdeal: return "NotInIdeal";
        case ErrorKind::LevelMismatch: return "LevelMismatch";
        case ErrorKind::RelationViolation: return "RelationViolation";
        case ErrorKind::HorizonExceeded: return "HorizonExceeded";
        case ErrorKind::RingMismatch: return "RingMismatch";
        case ErrorKind::HorizonMismatch: return "HorizonMismatch";
        case ErrorKind::SystemUnverified: return "SystemUnverified";
        case ErrorKind::HorizonExhausted: return "HorizonExhausted";
        case ErrorKind::IncompatibleRanks: return "IncompatibleRanks";
        case ErrorKind::NotTrivialSigma: return "NotTrivialSigma";
        case ErrorKind::NaturalityFailure: return "NaturalityFailure";
        case ErrorKind::StabilizationDescentFailure: return "StabilizationDescentFailure";
        case ErrorKind::NonIntegerMultiplicity: return "NonIntegerMultiplicity";
        case ErrorKind::WeakModeRequired: return "WeakModeRequired";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::Singular: return "Singular";
        case ErrorKind::Unsupported: return "Unsupported";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace lmforge
