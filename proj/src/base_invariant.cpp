#include "singosc/base_invariant.hpp"
#include "singosc/errors.hpp"
#include "singosc/specfun.hpp"

#include <cmath>
#include <string>

namespace singosc {

void validate(const ModelParams& p) {
    if (!(p.g >= 0.0))
        throw ValidationError("ModelParams: g must be >= 0, got " + std::to_string(p.g));
    double frac = p.g - std::floor(p.g);
    if (std::fabs(frac - 0.5) < 1e-9)
        throw ValidationError("ModelParams: half-integer g=" + std::to_string(p.g) +
                              " is excluded (gamma poles in the seed basis)");
}

double eigenvalue_base(int n, double g) {
    if (n < 0) throw ValidationError("eigenvalue_base: n must be non-negative");
    return 4.0 * n + 2.0 * g + 3.0;
}

double norm_const(int n, double g) {
    if (n < 0) throw ValidationError("norm_const: n must be non-negative");
    double lg = specfun::log_gamma(n + 1.0) - specfun::log_gamma(n + g + 1.5);
    return std::sqrt(2.0 * std::exp(lg));
}

double chi(int n, double g, double z) {
    if (z <= 0.0) return 0.0;
    return norm_const(n, g) * std::exp(-0.5 * z * z) * std::pow(z, g + 1.0) *
           specfun::laguerre(n, g + 0.5, z * z);
}

double chi_prime(int n, double g, double z) {
    if (z <= 0.0) throw ValidationError("chi_prime: z must be positive");
    double base = ((g + 1.0) / z - z) * chi(n, g, z);
    if (n == 0) return base;
    // d/dy L_n^{(a)}(y) = -L_{n-1}^{(a+1)}(y), y = z^2
    double inner = -2.0 * z * norm_const(n, g) * std::exp(-0.5 * z * z) *
                   std::pow(z, g + 1.0) *
                   specfun::laguerre(n - 1, g + 1.5, z * z);
    return base + inner;
}

std::complex<double> gauge_factor(const ErmakovParams& erm, double x, double t) {
    double s = sigma(t, erm);
    double sd = sigma_dot(t, erm);
    return std::exp(std::complex<double>(0.0, sd * x * x / (4.0 * s))) /
           std::sqrt(s);
}

std::complex<double> varphi1(int n, double g, const ErmakovParams& erm,
                             double x, double t) {
    double s = sigma(t, erm);
    return gauge_factor(erm, x, t) * chi(n, g, x / s);
}

double theta1(int n, double g, const ErmakovParams& erm, double t) {
    return -eigenvalue_base(n, g) * phase_integral(t, erm);
}

std::complex<double> psi1(int n, double g, const ErmakovParams& erm, double x,
                          double t) {
    return std::exp(std::complex<double>(0.0, theta1(n, g, erm, t))) *
           varphi1(n, g, erm, x, t);
}

QuantumState base_state(int n, double g, const ErmakovParams& erm) {
    validate(ModelParams{g});
    validate(erm);
    QuantumState st;
    st.n = n;
    st.lambda = eigenvalue_base(n, g);
    st.family = Family::base;
    st.varphi = [n, g, erm](double x, double t) { return varphi1(n, g, erm, x, t); };
    st.psi = [n, g, erm](double x, double t) { return psi1(n, g, erm, x, t); };
    return st;
}

double potential_v1(double g, double x) {
    return x * x + g * (g + 1.0) / (x * x);
}

ComplexField apply_invariant1(const ComplexField& f, const ErmakovParams& erm,
                              double g, const SpatialGrid& grid, double t) {
    if (static_cast<int>(f.size()) != grid.n)
        throw ValidationError("apply_invariant1: field size does not match grid");
    double s = sigma(t, erm);
    double sd = sigma_dot(t, erm);
    double h = grid.dx();
    auto d1 = derivative1(f, h);
    auto d2 = derivative2(f, h);
    ComplexField out(grid.n);
    const std::complex<double> i_unit(0.0, 1.0);
    for (int k = 0; k < grid.n; ++k) {
        double x = grid.x(k);
        std::complex<double> r =
            i_unit * (s * sd / 2.0) +
            (sd * sd / 4.0 + 1.0 / (s * s)) * x * x;
        out[k] = -s * s * d2[k] + i_unit * s * sd * x * d1[k] + r * f[k] +
                 s * s * g * (g + 1.0) / (x * x) * f[k];
    }
    return out;
}

ComplexField apply_hamiltonian1(const ComplexField& f, double g,
                                const SpatialGrid& grid) {
    if (static_cast<int>(f.size()) != grid.n)
        throw ValidationError("apply_hamiltonian1: field size does not match grid");
    auto d2 = derivative2(f, grid.dx());
    ComplexField out(grid.n);
    for (int k = 0; k < grid.n; ++k)
        out[k] = -d2[k] + potential_v1(g, grid.x(k)) * f[k];
    return out;
}

} // namespace singosc
