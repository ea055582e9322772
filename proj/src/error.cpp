#include "acsa/error.hpp"

namespace acsa {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NegativeRate: return "NegativeRate";
    case ErrorCode::NonFiniteInput: return "NonFiniteInput";
    case ErrorCode::ZeroField: return "ZeroField";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::NonUniqueSteadyState: return "NonUniqueSteadyState";
    case ErrorCode::SolverFailure: return "SolverFailure";
    case ErrorCode::StepFailure: return "StepFailure";
    case ErrorCode::NonPhysicalState: return "NonPhysicalState";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::InvalidOption: return "InvalidOption";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownKey: return "UnknownKey";
    case ErrorCode::MissingRequired: return "MissingRequired";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

ErrorCategory category(ErrorCode code) {
    switch (code) {
    case ErrorCode::NegativeRate:
    case ErrorCode::NonFiniteInput:
    case ErrorCode::InvalidGrid:
    case ErrorCode::InvalidOption:
    case ErrorCode::ParseError:
    case ErrorCode::UnknownKey:
    case ErrorCode::MissingRequired:
        return ErrorCategory::config;
    case ErrorCode::IoError:
        return ErrorCategory::io;
    default:
        return ErrorCategory::solver;
    }
}

}  // namespace acsa
