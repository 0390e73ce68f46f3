#include "singosc/ermakov.hpp"
#include "singosc/errors.hpp"

#include <cmath>
#include <string>

namespace singosc {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct SigmaState {
    double s;     // sigma^2
    double s1;    // d(sigma^2)/dt
    double s2;    // d^2(sigma^2)/dt^2
};

// sigma^2 = (a+c)/2 + (a-c)/2 cos 4T + sqrt(ac-1) sin 4T, T = t - t0.
SigmaState sigma_state(double t, const ErmakovParams& p) {
    double T = t - p.t0;
    double g = std::sqrt(p.a * p.c - 1.0);
    double co = std::cos(4.0 * T);
    double si = std::sin(4.0 * T);
    double s = 0.5 * (p.a + p.c) + 0.5 * (p.a - p.c) * co + g * si;
    double s1 = -2.0 * (p.a - p.c) * si + 4.0 * g * co;
    double s2 = -8.0 * (p.a - p.c) * co - 16.0 * g * si;
    return {s, s1, s2};
}

} // namespace

void validate(const ErmakovParams& p) {
    if (!(p.a > 0.0) || !(p.c > 0.0))
        throw ValidationError("ErmakovParams: a and c must be positive, got a=" +
                              std::to_string(p.a) + " c=" + std::to_string(p.c));
    if (!(p.a * p.c >= 1.0))
        throw ValidationError("ErmakovParams: need a*c >= 1, got a*c=" +
                              std::to_string(p.a * p.c));
}

ClassicalPair classical_pair(double t, const ErmakovParams& p) {
    double T = t - p.t0;
    return {std::cos(2.0 * T), std::sin(2.0 * T), -2.0 * std::sin(2.0 * T),
            2.0 * std::cos(2.0 * T)};
}

double sigma_sq(double t, const ErmakovParams& p) { return sigma_state(t, p).s; }

double sigma(double t, const ErmakovParams& p) {
    return std::sqrt(sigma_state(t, p).s);
}

double sigma_dot(double t, const ErmakovParams& p) {
    SigmaState st = sigma_state(t, p);
    return 0.5 * st.s1 / std::sqrt(st.s);
}

double sigma_ddot(double t, const ErmakovParams& p) {
    SigmaState st = sigma_state(t, p);
    // sigma = sqrt(s): sigma'' = (2 s s'' - s'^2) / (4 s^{3/2})
    return (2.0 * st.s * st.s2 - st.s1 * st.s1) / (4.0 * std::pow(st.s, 1.5));
}

double sigma_sq_min(const ErmakovParams& p) {
    double sum = p.a + p.c;
    // amplitude^2 = ((a-c)/2)^2 + ac - 1 = (sum^2 - 4)/4
    return 0.5 * (sum - std::sqrt(sum * sum - 4.0));
}

double ermakov_residual(double t, const ErmakovParams& p) {
    double sg = sigma(t, p);
    return std::fabs(sigma_ddot(t, p) + 4.0 * sg - 4.0 / (sg * sg * sg));
}

double phase_integral(double t, const ErmakovParams& p) {
    // Antiderivative of 1/sigma^2 in T: (1/2) arctan(sqrt(ac-1) + c tan 2T),
    // continued across the tangent poles by adding pi per half period.
    double g = std::sqrt(p.a * p.c - 1.0);
    auto branch = [&](double T) {
        double u = 2.0 * T;
        double m = (u - 0.5 * kPi) / kPi;
        double mr = std::nearbyint(m);
        // On (or within rounding of) a tangent pole the two one-sided
        // limits agree; take that value directly.
        if (std::fabs(m - mr) < 1e-13) return 0.5 * (0.5 + mr) * kPi;
        double k = std::floor((u + 0.5 * kPi) / kPi);
        return 0.5 * (std::atan(g + p.c * std::tan(u)) + k * kPi);
    };
    return branch(t - p.t0) - branch(0.0);
}

} // namespace singosc
