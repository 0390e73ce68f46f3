#pragma once

#include "singosc/base_invariant.hpp"
#include "singosc/factorization.hpp"

namespace singosc {

// Spectrum of the deformed invariant: index 0 is the added (missing) level
// at epsilon, index n >= 1 maps the base level n-1.
double eigenvalue_deformed(int n, const SeedParams& s, double g);

// Missing-state normalization from the half-line quadrature
// 1 = N^2 * integral dz / u(z)^2.  Authoritative value.
double norm_epsilon_quadrature(const SeedSolution& seed);

// Printed closed form, in both readings of the denominator factor:
// gamma_in_denominator=true evaluates
//   N^2 = (1+2g) [ka kb + kb^2 G(1/2-g) G((3+2g-eps)/4) /
//                          (G(3/2+g) G((1-2g-eps)/4))]
// and false replaces the last denominator gamma by its bare argument.
double norm_epsilon_closed(const SeedParams& s, double g,
                           bool gamma_in_denominator);

// The operation-level value: quadrature-based.
double norm_epsilon(const SeedParams& s, double g);

// Real z-profiles: profile(n, z) with n = 0 the missing state N/u and
// n >= 1 the mapped (chi_{n-1}' + W chi_{n-1}) / sqrt(lambda_{n-1} - eps).
// x-space states are gauge_factor(x, t) * profile(n, x/sigma).
double profile2(int n, const SeedSolution& seed, double z);

std::complex<double> varphi2(int n, const SeedSolution& seed,
                             const ErmakovParams& erm, double x, double t);

double theta2(int n, const SeedParams& s, double g, const ErmakovParams& erm,
              double t);

std::complex<double> psi2(int n, const SeedSolution& seed,
                          const ErmakovParams& erm, double x, double t);

QuantumState deformed_state(int n, const SeedSolution& seed,
                            const ErmakovParams& erm);

// I_2 = I_1 + F(x/sigma), same stencil treatment as apply_invariant1.
ComplexField apply_invariant2(const ComplexField& f, const SeedSolution& seed,
                              const ErmakovParams& erm, const SpatialGrid& grid,
                              double t);

// Bundles a validated seed with the width parameters and hands out states.
class DeformedSpectrum {
  public:
    DeformedSpectrum(const SeedParams& s, double g, const ErmakovParams& erm);

    double lambda(int n) const;
    QuantumState state(int n) const;
    const SeedSolution& seed() const { return seed_; }
    const ErmakovParams& erm() const { return erm_; }

  private:
    SeedSolution seed_;
    ErmakovParams erm_;
};

} // namespace singosc
