#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polarsym {

enum class ErrorCode {
    IllegalRank,
    DimensionMismatch,
    OrbitCapExceeded,
    GroupTooLarge,
    DependentBasis,
    NotDominant,
    OverlappingBlocks,
    AlgebraMismatch,
    WeightNotPresent,
    IneligibleWeight,
    InternalInconsistency,
    LengthMismatch,
    ConditionViolated,
    PreconditionViolated,
    ParseError,
    SemanticError,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, std::string expected, const std::string& message)
        : Error(ErrorCode::ParseError,
                message + " at position " + std::to_string(position) + " (expected " + expected + ")"),
          position_(position),
          expected_(std::move(expected)) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

}  // namespace polarsym
