#pragma once

#include <functional>

namespace ktrack {

/// Adaptive Simpson integration of f over [a, b] to absolute tolerance tol.
/// Throws std::runtime_error when the recursion depth limit is hit before the
/// requested tolerance is met (the achieved error estimate is reported).
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol);

/// Golden-section refinement of a maximum of f known to lie in [lo, hi].
/// Returns the maximizing argument; stops when the bracket shrinks below
/// rel_tol * (1 + |u|).
double golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                          double rel_tol);

}  // namespace ktrack
