#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace apollodom {

/// Raised when an operation would exceed a configured size cap (level cap,
/// dense-matrix cap, solver table cap). The message says which cap and how
/// to proceed.
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the solver when the candidate budget runs out before the search
/// settles. Carries the bracket that was proved before giving up:
/// bracket_lo <= gamma <= bracket_hi.
class BudgetExceededError : public std::runtime_error {
public:
    BudgetExceededError(int lo, int hi, std::uint64_t examined, std::uint64_t pruned)
        : std::runtime_error("candidate budget exceeded; proved bracket [" +
                             std::to_string(lo) + ", " + std::to_string(hi) + "]"),
          bracket_lo(lo),
          bracket_hi(hi),
          candidates_examined(examined),
          pruned(pruned) {}

    int bracket_lo;
    int bracket_hi;
    std::uint64_t candidates_examined;
    std::uint64_t pruned;
};

/// Raised when the solver is handed (or derives) an empty bracket, or when a
/// search exhausts its bracket without a witness. Both indicate a bug in the
/// bound supplier, never a property of the instance.
class InfeasibleBracketError : public std::logic_error {
public:
    explicit InfeasibleBracketError(const std::string& what) : std::logic_error(what) {}
};

} // namespace apollodom
