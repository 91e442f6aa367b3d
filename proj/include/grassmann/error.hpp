#pragma once

#include <stdexcept>
#include <string>

namespace grassmann {

/// Error categories surfaced by the library. The CLI maps these to exit codes:
/// guard conditions (EnumerationTooLarge, BudgetExceeded) exit 2, everything
/// else exits 1.
enum class Errc {
    NonPrime,
    InvalidDegree,
    NotPrimePower,
    FieldTooLarge,
    DivisionByZero,
    DimensionMismatch,
    FieldMismatch,
    InvalidDimension,
    ValueOutOfRange,
    ParseError,
    EnumerationTooLarge,
    BudgetExceeded,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

    /// True for computational guards (caps/budgets) as opposed to invalid input.
    bool is_guard() const noexcept {
        return code_ == Errc::EnumerationTooLarge || code_ == Errc::BudgetExceeded;
    }

private:
    Errc code_;
};

}  // namespace grassmann
