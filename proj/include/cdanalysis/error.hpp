#pragma once

#include <stdexcept>
#include <string>

namespace cd {

enum class ErrorKind {
    ZeroDivision,
    ZeroArgument,
    DegenerateAngles,
    LevelMismatch,
    RePartMismatch,
    IndexOutOfRange,
    DownEmbed,
    OutOfDomain,
    SeedSingularity,
    DivergenceRadius,
    StepUnderflow,
    NoConvergence,
    EvaluationFailure,
    BranchFailure,
    UnwrapAmbiguity,
    ZeroOnPath,
    DomainOfConvergence,
    EmptyStrip,
    QuadratureFailure,
    TruncationTooSmall,
    PoleAt,
    PoleAtOne,
    DomainOfRepresentation,
    NonPositive,
    ParseError,
    UsageError,
};

const char* to_string(ErrorKind kind);

/// Library error carrying a machine-readable kind plus context text.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace cd
