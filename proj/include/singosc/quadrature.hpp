#pragma once

#include <functional>

namespace singosc {

struct QuadratureResult {
    double value;
    double error_estimate;
    int evaluations;
};

// Globally adaptive Gauss-Kronrod 7/15 on [a, b].  Splits the segment with
// the largest error estimate until the total satisfies
//   err <= max(abs_tol, rel_tol * |value|).
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol = 1e-12,
                           double rel_tol = 1e-12);

// [a, inf) for integrands with at least exponential decay: the tail is
// extended in growing panels until a panel's contribution falls below the
// tolerance.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double a, double abs_tol = 1e-12,
                                         double rel_tol = 1e-12);

} // namespace singosc
