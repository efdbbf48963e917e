#pragma once

#include <functional>

namespace gie {

// Adaptive Simpson integration on [a, b].
//
// Subdivides until the Richardson error estimate of each panel satisfies
// |err| <= max(rel_tol * |integral_so_far|, abs_tol), then returns the
// extrapolated value S2 + (S2 - S1) / 15.  Throws NumericalError when the
// recursion depth is exhausted before the tolerance is met (the message
// carries the residual estimate).
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double rel_tol = 1e-8, double abs_tol = 0.0,
                        int max_depth = 48);

}  // namespace gie
