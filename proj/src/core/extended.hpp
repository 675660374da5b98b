#pragma once

#include <cmath>
#include <limits>

namespace polarlab {

// Extended nonnegative reals: support/radial samples live in [0, +inf].
// Conventions used throughout: 1/0 = +inf, 1/inf = 0, inf + x = inf,
// min(inf, x) = x. IEEE arithmetic already provides all of these for
// nonnegative operands; the helpers below just name the intent.

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline bool is_inf(double x) { return std::isinf(x); }

/// Reciprocal on [0, +inf] with 1/0 = +inf and 1/inf = 0.
inline double inv_ext(double x) { return 1.0 / x; }

/// Multiply by a positive finite scalar; r * inf = inf.
inline double scale_ext(double r, double x) { return is_inf(x) ? kInf : r * x; }

}  // namespace polarlab
