#ifndef PARSCHED_ERRORS_HPP
#define PARSCHED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace parsched {

struct SchedulingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A piece would run in parallel with another piece on the same machine, or
// with another piece of the same job on the other machine.
struct OverlapError : SchedulingError {
    using SchedulingError::SchedulingError;
};

struct EmptySetError : SchedulingError {
    using SchedulingError::SchedulingError;
};

struct NonPositiveSizeError : SchedulingError {
    using SchedulingError::SchedulingError;
};

// Requested target makespan is below the offline optimum.
struct InfeasibleError : SchedulingError {
    using SchedulingError::SchedulingError;
};

struct UnsortedInputError : SchedulingError {
    using SchedulingError::SchedulingError;
};

struct BadDeltaError : SchedulingError {
    using SchedulingError::SchedulingError;
};

// A snapshot handed to an adversary is incomplete or violates the
// no-idle accounting the lower-bound constructions rely on.
struct ProfileError : SchedulingError {
    using SchedulingError::SchedulingError;
};

struct ParseError : SchedulingError {
    ParseError(const std::string& msg, int line)
        : SchedulingError("line " + std::to_string(line) + ": " + msg), line_number(line) {}
    int line_number;
};

// Internal assertion failure: signals an implementation bug, never a
// legal input. Mapped to exit code 2 by the CLI.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace parsched

#endif
