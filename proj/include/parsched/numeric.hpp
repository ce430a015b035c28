#ifndef PARSCHED_NUMERIC_HPP
#define PARSCHED_NUMERIC_HPP

#include <cmath>

namespace parsched {

// Absolute comparison tolerance used throughout (default 1e-9, overridable
// via the SCHED_TOL environment variable; read once).
double tolerance();

// Pieces shorter than this are dropped silently when an algorithm requests
// them; these only occur at case boundaries where the residual is
// analytically zero.
inline constexpr double min_piece_length = 1e-12;

inline bool nearly_equal(double a, double b) { return std::abs(a - b) <= tolerance(); }

// a <= b up to tolerance
inline bool leq(double a, double b) { return a <= b + tolerance(); }

// a >= b up to tolerance
inline bool geq(double a, double b) { return a + tolerance() >= b; }

} // namespace parsched

#endif
