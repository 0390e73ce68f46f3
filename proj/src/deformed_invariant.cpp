#include "singosc/deformed_invariant.hpp"
#include "singosc/errors.hpp"
#include "singosc/quadrature.hpp"
#include "singosc/specfun.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <string>

namespace singosc {

double eigenvalue_deformed(int n, const SeedParams& s, double g) {
    if (n < 0) throw ValidationError("eigenvalue_deformed: n must be non-negative");
    if (n == 0) return s.epsilon;
    return eigenvalue_base(n - 1, g);
}

double norm_epsilon_quadrature(const SeedSolution& seed) {
    if (seed.params().kb == 0.0)
        throw DivergenceError("norm_epsilon: 1/u^2 is not integrable at the origin "
                              "when kb = 0");
    auto integrand = [&](double z) {
        return std::exp(-2.0 * seed.log_abs_u(z));
    };
    double total = integrate_semi_infinite(integrand, 0.0, 1e-13, 1e-12).value;
    return 1.0 / std::sqrt(total);
}

namespace {
// SeedSolution caches the same quadrature at construction.
double missing_norm_of(const SeedSolution& seed) { return seed.missing_norm(); }
} // namespace

double norm_epsilon_closed(const SeedParams& s, double g,
                           bool gamma_in_denominator) {
    using specfun::SignedLog;
    SignedLog n1 = specfun::log_gamma_signed(0.5 - g);
    SignedLog n2 = specfun::log_gamma_signed((3.0 + 2.0 * g - s.epsilon) / 4.0);
    SignedLog d1 = specfun::log_gamma_signed(1.5 + g);
    double ratio;
    if (gamma_in_denominator) {
        SignedLog d2 = specfun::log_gamma_signed((1.0 - 2.0 * g - s.epsilon) / 4.0);
        ratio = n1.sign * n2.sign * d1.sign * d2.sign *
                std::exp(n1.log_abs + n2.log_abs - d1.log_abs - d2.log_abs);
    } else {
        double bare = (1.0 - 2.0 * g - s.epsilon) / 4.0;
        ratio = n1.sign * n2.sign * d1.sign *
                std::exp(n1.log_abs + n2.log_abs - d1.log_abs) / bare;
    }
    double n_sq = (1.0 + 2.0 * g) * (s.ka * s.kb + s.kb * s.kb * ratio);
    return n_sq > 0.0 ? std::sqrt(n_sq) : std::numeric_limits<double>::quiet_NaN();
}

double norm_epsilon(const SeedParams& s, double g) {
    return norm_epsilon_quadrature(SeedSolution(s, g));
}

double profile2(int n, const SeedSolution& seed, double z) {
    if (n < 0) throw ValidationError("profile2: n must be non-negative");
    if (n == 0) return missing_norm_of(seed) * std::exp(-seed.log_abs_u(z));
    double g = seed.g();
    double lam = eigenvalue_base(n - 1, g);
    double scale = 1.0 / std::sqrt(lam - seed.params().epsilon);
    return scale * (chi_prime(n - 1, g, z) + seed.w(z) * chi(n - 1, g, z));
}

std::complex<double> varphi2(int n, const SeedSolution& seed,
                             const ErmakovParams& erm, double x, double t) {
    double s = sigma(t, erm);
    return gauge_factor(erm, x, t) * profile2(n, seed, x / s);
}

double theta2(int n, const SeedParams& s, double g, const ErmakovParams& erm,
              double t) {
    return -eigenvalue_deformed(n, s, g) * phase_integral(t, erm);
}

std::complex<double> psi2(int n, const SeedSolution& seed,
                          const ErmakovParams& erm, double x, double t) {
    double th = theta2(n, seed.params(), seed.g(), erm, t);
    return std::exp(std::complex<double>(0.0, th)) * varphi2(n, seed, erm, x, t);
}

QuantumState deformed_state(int n, const SeedSolution& seed,
                            const ErmakovParams& erm) {
    validate(erm);
    QuantumState st;
    st.n = n;
    st.lambda = eigenvalue_deformed(n, seed.params(), seed.g());
    st.family = n == 0 ? Family::missing : Family::deformed;
    auto sp = std::make_shared<SeedSolution>(seed);
    st.varphi = [n, sp, erm](double x, double t) {
        return varphi2(n, *sp, erm, x, t);
    };
    st.psi = [n, sp, erm](double x, double t) { return psi2(n, *sp, erm, x, t); };
    return st;
}

ComplexField apply_invariant2(const ComplexField& f, const SeedSolution& seed,
                              const ErmakovParams& erm, const SpatialGrid& grid,
                              double t) {
    ComplexField out = apply_invariant1(f, erm, seed.g(), grid, t);
    double s = sigma(t, erm);
    for (int k = 0; k < grid.n; ++k)
        out[k] += seed.f(grid.x(k) / s) * f[k];
    return out;
}

DeformedSpectrum::DeformedSpectrum(const SeedParams& s, double g,
                                   const ErmakovParams& erm)
    : seed_(s, g), erm_(erm) {
    validate(erm);
}

double DeformedSpectrum::lambda(int n) const {
    return eigenvalue_deformed(n, seed_.params(), seed_.g());
}

QuantumState DeformedSpectrum::state(int n) const {
    return deformed_state(n, seed_, erm_);
}

} // namespace singosc
