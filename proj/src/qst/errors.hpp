#pragma once

#include <stdexcept>
#include <string>

namespace qst {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input text rejected: syntax or validation. Carries a 1-based line number
// (0 when the problem is not tied to a single line).
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& msg)
        : Error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg), line(line_) {}
};

// A structural guarantee the analyses rely on failed to hold on actual data.
struct Inconsistency : Error {
    using Error::Error;
};

// Computation window too small: expansion horizon or search cap exceeded.
struct LimitError : Error {
    using Error::Error;
};

}  // namespace qst
