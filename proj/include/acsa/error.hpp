#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace acsa {

enum class ErrorCode {
    NegativeRate,
    NonFiniteInput,
    ZeroField,
    DegenerateDenominator,
    NonUniqueSteadyState,
    SolverFailure,
    StepFailure,
    NonPhysicalState,
    TooFewSamples,
    InvalidGrid,
    InvalidOption,
    ParseError,
    UnknownKey,
    MissingRequired,
    IoError,
};

std::string_view to_string(ErrorCode code);

/// Broad failure class, used for CLI exit codes.
enum class ErrorCategory { config, solver, io };

ErrorCategory category(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace acsa
