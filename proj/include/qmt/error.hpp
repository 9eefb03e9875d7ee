#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qmt {

enum class ErrorCode {
    arithmetic_overflow,
    dimension_mismatch,
    not_surjective,
    invalid_degree,
    invalid_input,
    precondition_violated,
    no_solution,
    multiple_solutions,
    residual_nonzero,
    guard_exceeded,
    kmax_out_of_range,
    budget_exceeded,
    insufficient_counts,
    unknown_dialect,
};

/// Stable kebab-case name used in JSON error documents.
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Thrown by fixed-width kernels; callers catch it and retry with BigInt.
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& what)
        : Error(ErrorCode::arithmetic_overflow, what) {}
};

}  // namespace qmt
