#pragma once

#include <stdexcept>
#include <string>

namespace dualham {

// Caller passed something that violates an operation's precondition.
struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A constructed object failed independent verification. Always a bug in the
// constructor, never something the caller can fix.
struct verification_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed file or document.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dualham
