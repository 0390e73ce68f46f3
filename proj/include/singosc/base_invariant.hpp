#pragma once

#include "singosc/ermakov.hpp"
#include "singosc/grid.hpp"

#include <complex>
#include <functional>

namespace singosc {

// Barrier coupling of the half-line potential x^2 + g(g+1)/x^2.
// Half-integer g is rejected: the second seed branch hits gamma poles there.
struct ModelParams {
    double g = 1.0;
};

void validate(const ModelParams& p);

enum class Family { base, deformed, missing };

// One spectral state of a quantum invariant: varphi is the invariant
// eigenfunction, psi carries the accumulated phase and solves the wave
// equation of its family Hamiltonian.
struct QuantumState {
    int n;
    double lambda;
    Family family;
    std::function<std::complex<double>(double x, double t)> varphi;
    std::function<std::complex<double>(double x, double t)> psi;
};

// lambda_n = 4n + 2g + 3
double eigenvalue_base(int n, double g);

// N_n with N_n^2 = 2 Gamma(n+1) / Gamma(n+g+3/2)
double norm_const(int n, double g);

// chi_n(z) = N_n e^{-z^2/2} z^{g+1} L_n^{(g+1/2)}(z^2): orthonormal on
// z in (0, inf); n interior zeros.
double chi(int n, double g, double z);
double chi_prime(int n, double g, double z);

// e^{i sigma_dot x^2 / (4 sigma)} / sqrt(sigma): the common factor turning
// z-profiles into x-space invariant eigenfunctions.
std::complex<double> gauge_factor(const ErmakovParams& erm, double x, double t);

std::complex<double> varphi1(int n, double g, const ErmakovParams& erm,
                             double x, double t);

// theta_n(t) = -lambda_n * integral_{t0}^{t} dt'/sigma^2
double theta1(int n, double g, const ErmakovParams& erm, double t);

std::complex<double> psi1(int n, double g, const ErmakovParams& erm, double x,
                          double t);

QuantumState base_state(int n, double g, const ErmakovParams& erm);

double potential_v1(double g, double x);

// I_1 = -s^2 d_xx + i s sdot x d_x + i s sdot/2 + (sdot^2/4 + 1/s^2) x^2
//       + s^2 g(g+1)/x^2,  s = sigma(t)
ComplexField apply_invariant1(const ComplexField& f, const ErmakovParams& erm,
                              double g, const SpatialGrid& grid, double t);

// H_1 = -d_xx + x^2 + g(g+1)/x^2 (time-independent)
ComplexField apply_hamiltonian1(const ComplexField& f, double g,
                                const SpatialGrid& grid);

} // namespace singosc
