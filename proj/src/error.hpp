#pragma once

#include <stdexcept>
#include <string>

namespace wisealice {

// Raised when a caller violates an operation's precondition (bad payoff,
// forbidden representation angle, out-of-range index, ...).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace wisealice
