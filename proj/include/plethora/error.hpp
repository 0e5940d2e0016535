#pragma once

#include <stdexcept>
#include <string>

namespace plethora {

/// Raised when an argument violates an operation's precondition
/// (nonzero constant term, asymmetric diamond, malformed input, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an enumeration would exceed its configured size limit.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string &message)
{
    if (!condition) {
        throw PreconditionError(message);
    }
}

} // namespace plethora
