#pragma once

namespace singosc::specfun {

// value = sign * exp(log_abs); sign is -1, 0 or +1.
struct SignedLog {
    double log_abs;
    int sign;
};

bool is_nonpositive_integer(double x);

// Euler gamma function.  Throws PoleError at non-positive integers.
double gamma(double x);

// log(Gamma(x)) for x > 0.
double log_gamma(double x);

// log|Gamma(x)| and its sign, valid on either side of the poles.
SignedLog log_gamma_signed(double x);

// Generalized Laguerre polynomial L_n^{(alpha)}(x) via the three-term
// recurrence (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}.
double laguerre(int n, double alpha, double x);

// Kummer confluent hypergeometric 1F1(a, b; x).  Throws PoleError when b
// is a non-positive integer.  Large positive x overflows double for
// generic a; use kummer_1f1_scaled there.
double kummer_1f1(double a, double b, double x);

// 1F1 in signed-log form, usable far into the e^x growth regime.
SignedLog kummer_1f1_scaled(double a, double b, double x);

// Error function, |erf(x)| <= 1, accurate to ~1e-14 relative.
double erf(double x);

} // namespace singosc::specfun
