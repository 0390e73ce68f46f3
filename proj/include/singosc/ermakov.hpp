#pragma once

namespace singosc {

// Parameters of the width function sigma(t).  Admissible when a > 0, c > 0
// and a*c >= 1; then sigma^2 stays strictly positive for all t.
struct ErmakovParams {
    double a = 1.0;
    double c = 1.0;
    double t0 = 0.0;
};

void validate(const ErmakovParams& p);

// q1 = cos 2(t-t0), q2 = sin 2(t-t0): independent solutions of
// q'' + 4q = 0 with Wronskian q1 q2' - q2 q1' = 2.
struct ClassicalPair {
    double q1, q2, q1_dot, q2_dot;
};
ClassicalPair classical_pair(double t, const ErmakovParams& p);

// sigma^2(t) = a q1^2 + c q2^2 + 2 sqrt(ac-1) q1 q2; period pi/2.
double sigma_sq(double t, const ErmakovParams& p);
double sigma(double t, const ErmakovParams& p);
double sigma_dot(double t, const ErmakovParams& p);
double sigma_ddot(double t, const ErmakovParams& p);

// Minimum of sigma^2 over t, from the closed form.
double sigma_sq_min(const ErmakovParams& p);

// |sigma'' + 4 sigma - 4 / sigma^3| from the closed-form derivatives.
double ermakov_residual(double t, const ErmakovParams& p);

// integral over [t0, t] of dt'/sigma^2, evaluated on the continuous branch
// of its closed form (monotone increasing in t, zero at t0).
double phase_integral(double t, const ErmakovParams& p);

} // namespace singosc
