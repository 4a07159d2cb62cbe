#pragma once

#include <stdexcept>
#include <string>

namespace ptdial {

// Malformed input data (bad JSON line, bad CSV row, unknown label text).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally valid input violating a domain invariant (duplicate id,
// dialogue too short, empty corpus, missing pipeline precondition).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem failures, always carrying the offending path in the message.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ptdial
