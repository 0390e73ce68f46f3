#pragma once

#include "singosc/base_invariant.hpp"
#include "singosc/ermakov.hpp"
#include "singosc/grid.hpp"

#include <utility>

namespace singosc {

// Deformation data: factorization energy epsilon and the mixing
// coefficients of the seed u = ka u1 + kb u2.
struct SeedParams {
    double epsilon = 0.0;
    double ka = 1.0;
    double kb = 1.0;
};

// Admissibility for barrier coupling g:
//   epsilon < 2g+3, kb != 0, and ka/kb above mixture_lower_bound(g, eps)
// (equivalently: the e^{+z^2/2} asymptotic coefficient of u has the sign
// of kb, so u keeps the sign it has at the origin).
void validate(const SeedParams& s, double g);

// Smallest admissible ka/kb: -Gamma(1/2-g) Gamma((3+2g-eps)/4) /
// [Gamma(3/2+g) Gamma((1-2g-eps)/4)], with 1/Gamma = 0 at the poles.
double mixture_lower_bound(double g, double epsilon);

// Seed value and first two derivatives at one z, all sharing one
// log factor: physical u(z) = u * exp(log_scale), etc.  The shared factor
// cancels in W = -u'/u and F = 2W', which stay finite where u grows like
// e^{+z^2/2}.
struct SeedPoint {
    double log_scale;
    double u;
    double du;
    double d2u;
};

// Basis solutions of -v'' + (z^2 + g(g+1)/z^2) v = eps v:
//   branch 1: e^{-z^2/2} z^{g+1} 1F1((3+2g-eps)/4, 3/2+g; z^2)
//   branch 2: e^{-z^2/2} z^{-g}  1F1((1-2g-eps)/4, 1/2-g; z^2)
SeedPoint seed_branch(int which, double g, double epsilon, double z);

// Plain (unscaled) basis values; overflows for z^2/2 beyond double range.
std::pair<double, double> seed_basis(double g, double epsilon, double z);

// u1 u2' - u2 u1' at z; analytically the constant -(2g+1).
double wronskian_pair(double g, double epsilon, double z);

// Reference-point value with an internal constancy check across z.
double wronskian_tilde(double g, double epsilon);

// Dense sign scan of u over log-spaced z; throws NodelessError on a sign
// change or an exact zero.
void nodeless_scan(const SeedParams& s, double g, double z_lo = 1e-4,
                   double z_hi = 12.0, int samples = 20000);

// Validated seed with its nodeless certificate; immutable, cheap to copy.
// The missing-state norm (the 1 = N^2 * int dz/u^2 quadrature) is computed
// once at construction.
class SeedSolution {
  public:
    SeedSolution(const SeedParams& s, double g);

    const SeedParams& params() const { return p_; }
    double g() const { return g_; }

    SeedPoint scaled(double z) const;
    double log_abs_u(double z) const;
    double u(double z) const;        // plain value; DivergenceError on overflow
    double u_prime(double z) const;
    double w(double z) const;        // -u'/u
    double w_prime(double z) const;
    double f(double z) const;        // 2 w'
    double missing_norm() const { return missing_norm_; }

  private:
    SeedParams p_;
    double g_;
    double missing_norm_;
};

// Convenience forms; validate (cheaply) on every call but skip the scan.
double seed_u(const SeedParams& s, double g, double z);
double superpotential_w(const SeedParams& s, double g, double z);
double deformation_f(const SeedParams& s, double g, double z);

// V2(x,t) = x^2 + g(g+1)/x^2 + F(x/sigma)/sigma^2
double potential_v2(const SeedSolution& seed, const ErmakovParams& erm,
                    double x, double t);
double potential_v2(const SeedParams& s, double g, const ErmakovParams& erm,
                    double x, double t);

// A = sigma d_x + w,  w(x,t) = -i (sigma_dot/2) x + W(x/sigma);
// A^dagger = -sigma d_x + conj(w).
ComplexField apply_a(const ComplexField& f, const SeedSolution& seed,
                     const ErmakovParams& erm, const SpatialGrid& grid,
                     double t);
ComplexField apply_a_dagger(const ComplexField& f, const SeedSolution& seed,
                            const ErmakovParams& erm, const SpatialGrid& grid,
                            double t);

// H_2(t) = -d_xx + V2(x,t)
ComplexField apply_hamiltonian2(const ComplexField& f, const SeedSolution& seed,
                                const ErmakovParams& erm,
                                const SpatialGrid& grid, double t);

} // namespace singosc
