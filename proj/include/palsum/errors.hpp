#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace palsum {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller broke a stated precondition (bad base, malformed word, ...).
struct ContractError : Error {
    using Error::Error;
};

// A construction would exceed its state budget.  Sizes are computed up front,
// so this is always thrown before the big allocation, never after.
struct ResourceLimitError : Error {
    ResourceLimitError(const std::string& what, std::size_t requested_, std::size_t budget_)
        : Error(what + " (needs " + std::to_string(requested_) + " states, budget " +
                std::to_string(budget_) + ")"),
          requested(requested_), budget(budget_) {}
    std::size_t requested;
    std::size_t budget;
};

// Unreadable machine file or malformed textual input.
struct ParseError : Error {
    using Error::Error;
};

} // namespace palsum
