#pragma once

#include <stdexcept>
#include <string>

namespace surgery {

// Raised when inputs fail a precondition: malformed slope strings, slope 0/0,
// non-symmetric linking matrices, inadmissible chain parameters, and so on.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a certified check is violated: an additivity mismatch inside a
// certificate tree, a leaf below the L-space constant, a distinguishing
// inequality that fails for some parameter tuple.  Distinct from
// ValidationError so callers can map the two onto different exit codes.
class CheckFailure : public std::runtime_error {
public:
    explicit CheckFailure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace surgery
