#include "singosc/factorization.hpp"
#include "singosc/errors.hpp"
#include "singosc/quadrature.hpp"
#include "singosc/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace singosc {

namespace {

using specfun::SignedLog;

struct BranchConsts {
    double beta; // power of z in the prefactor e^{-z^2/2} z^beta
    double a;
    double b;
};

BranchConsts branch_consts(int which, double g, double epsilon) {
    if (which == 1) return {g + 1.0, (3.0 + 2.0 * g - epsilon) / 4.0, 1.5 + g};
    if (which == 2) return {-g, (1.0 - 2.0 * g - epsilon) / 4.0, 0.5 - g};
    throw ValidationError("seed_branch: branch index must be 1 or 2");
}

// One additive contribution value = coeff * exp(lg).
struct Term {
    double lg;
    double coeff;
};

double combine(const Term* terms, int count, double log_scale) {
    double s = 0.0;
    for (int i = 0; i < count; ++i)
        s += terms[i].coeff * std::exp(terms[i].lg - log_scale);
    return s;
}

// Gamma(b)/Gamma(a) with the reciprocal-gamma convention 1/Gamma(pole) = 0,
// so the ratio is defined for every admissible parameter set.
double gamma_ratio(double b, double a) {
    if (specfun::is_nonpositive_integer(a)) return 0.0;
    SignedLog lb = specfun::log_gamma_signed(b);
    SignedLog la = specfun::log_gamma_signed(a);
    return lb.sign * la.sign * std::exp(lb.log_abs - la.log_abs);
}

// u, u', u'' of one branch as Terms against a caller-chosen offset.
// P = e^{-z^2/2} z^beta, M = 1F1(a,b;z^2):
//   u   = P M
//   u'  = P [ (beta/z - z) M + 2z M' ]
//   u'' = P [ ((beta/z-z)^2 - beta/z^2 - 1) M + (4beta - 4z^2 + 2) M' + 4z^2 M'' ]
// with M', M'' from the contiguous derivative (a)_k/(b)_k shifts.
struct BranchTerms {
    Term u[1];
    Term du[2];
    Term d2u[3];
    double log_u; // lg of the leading u term, for offset selection
};

BranchTerms branch_terms(const BranchConsts& c, double z) {
    double y = z * z;
    SignedLog m0 = specfun::kummer_1f1_scaled(c.a, c.b, y);
    SignedLog m1s = specfun::kummer_1f1_scaled(c.a + 1.0, c.b + 1.0, y);
    SignedLog m2s = specfun::kummer_1f1_scaled(c.a + 2.0, c.b + 2.0, y);
    double r1 = c.a / c.b;
    double r2 = c.a * (c.a + 1.0) / (c.b * (c.b + 1.0));

    double logP = -0.5 * y + c.beta * std::log(z);
    double pz = c.beta / z - z;

    BranchTerms t;
    t.u[0] = {logP + m0.log_abs, static_cast<double>(m0.sign)};
    t.du[0] = {logP + m0.log_abs, pz * m0.sign};
    t.du[1] = {logP + m1s.log_abs, 2.0 * z * r1 * m1s.sign};
    t.d2u[0] = {logP + m0.log_abs, (pz * pz - c.beta / y - 1.0) * m0.sign};
    t.d2u[1] = {logP + m1s.log_abs, (4.0 * c.beta - 4.0 * y + 2.0) * r1 * m1s.sign};
    t.d2u[2] = {logP + m2s.log_abs, 4.0 * y * r2 * m2s.sign};
    t.log_u = m0.sign != 0 ? logP + m0.log_abs : logP + m1s.log_abs;
    return t;
}

SeedPoint assemble(const BranchTerms& bt, double log_scale) {
    SeedPoint p;
    p.log_scale = log_scale;
    p.u = combine(bt.u, 1, log_scale);
    p.du = combine(bt.du, 2, log_scale);
    p.d2u = combine(bt.d2u, 3, log_scale);
    return p;
}

void require_positive_z(double z, const char* fn) {
    if (!(z > 0.0))
        throw ValidationError(std::string(fn) + ": z must be positive, got " +
                              std::to_string(z));
}

SeedPoint seed_point(const SeedParams& s, double g, double z) {
    require_positive_z(z, "seed_u");
    BranchTerms b1 = branch_terms(branch_consts(1, g, s.epsilon), z);
    BranchTerms b2 = branch_terms(branch_consts(2, g, s.epsilon), z);
    double l1 = s.ka != 0.0 ? b1.log_u + std::log(std::fabs(s.ka))
                            : -std::numeric_limits<double>::infinity();
    double l2 = b2.log_u + std::log(std::fabs(s.kb));
    double L0 = std::max(l1, l2);
    SeedPoint p1 = assemble(b1, L0);
    SeedPoint p2 = assemble(b2, L0);
    return {L0, s.ka * p1.u + s.kb * p2.u, s.ka * p1.du + s.kb * p2.du,
            s.ka * p1.d2u + s.kb * p2.d2u};
}

double checked_exp(double lg, const char* fn) {
    if (lg > 700.0)
        throw DivergenceError(std::string(fn) +
                              ": value exceeds double range; use the scaled form");
    return std::exp(lg);
}

} // namespace

double mixture_lower_bound(double g, double epsilon) {
    // gamma1 = Gamma(3/2+g)/Gamma((3+2g-eps)/4) > 0 for eps < 2g+3;
    // gamma2 = Gamma(1/2-g)/Gamma((1-2g-eps)/4); bound = -gamma2/gamma1.
    double g1 = gamma_ratio(1.5 + g, (3.0 + 2.0 * g - epsilon) / 4.0);
    double g2 = gamma_ratio(0.5 - g, (1.0 - 2.0 * g - epsilon) / 4.0);
    return -g2 / g1;
}

void validate(const SeedParams& s, double g) {
    validate(ModelParams{g});
    if (!(s.epsilon < 2.0 * g + 3.0))
        throw ValidationError("SeedParams: need epsilon < 2g+3, got epsilon=" +
                              std::to_string(s.epsilon) + " g=" + std::to_string(g));
    if (s.kb == 0.0)
        throw ValidationError("SeedParams: kb must be nonzero");
    double g1 = gamma_ratio(1.5 + g, (3.0 + 2.0 * g - s.epsilon) / 4.0);
    double g2 = gamma_ratio(0.5 - g, (1.0 - 2.0 * g - s.epsilon) / 4.0);
    // Sign of the e^{+z^2/2} coefficient must match the sign at the origin
    // (set by kb).  Within rounding of the boundary the zero of u sits at
    // arbitrarily large z, so the boundary itself is rejected.
    double c_inf = s.ka * g1 + s.kb * g2;
    double scale = std::fabs(s.ka * g1) + std::fabs(s.kb * g2);
    if (!((s.kb > 0.0 ? c_inf : -c_inf) > 1e-12 * scale))
        throw ValidationError(
            "SeedParams: ka/kb = " + std::to_string(s.ka / s.kb) +
            " is not above the nodeless bound " +
            std::to_string(mixture_lower_bound(g, s.epsilon)));
}

SeedPoint seed_branch(int which, double g, double epsilon, double z) {
    require_positive_z(z, "seed_branch");
    BranchTerms bt = branch_terms(branch_consts(which, g, epsilon), z);
    return assemble(bt, bt.log_u);
}

std::pair<double, double> seed_basis(double g, double epsilon, double z) {
    SeedPoint p1 = seed_branch(1, g, epsilon, z);
    SeedPoint p2 = seed_branch(2, g, epsilon, z);
    return {p1.u * checked_exp(p1.log_scale, "seed_basis"),
            p2.u * checked_exp(p2.log_scale, "seed_basis")};
}

double wronskian_pair(double g, double epsilon, double z) {
    SeedPoint p1 = seed_branch(1, g, epsilon, z);
    SeedPoint p2 = seed_branch(2, g, epsilon, z);
    double lg = p1.log_scale + p2.log_scale;
    return (p1.u * p2.du - p2.u * p1.du) * checked_exp(lg, "wronskian_pair");
}

double wronskian_tilde(double g, double epsilon) {
    double ref = wronskian_pair(g, epsilon, 1.0);
    for (double z : {0.2, 3.0}) {
        double v = wronskian_pair(g, epsilon, z);
        if (std::fabs(v - ref) > 1e-9 * std::max(1.0, std::fabs(ref)))
            throw ConvergenceError("wronskian_tilde: basis Wronskian drifts: " +
                                   std::to_string(ref) + " vs " + std::to_string(v) +
                                   " at z=" + std::to_string(z));
    }
    return ref;
}

void nodeless_scan(const SeedParams& s, double g, double z_lo, double z_hi,
                   int samples) {
    double prev_sign = 0.0;
    double llo = std::log(z_lo), lhi = std::log(z_hi);
    for (int i = 0; i < samples; ++i) {
        double z = std::exp(llo + (lhi - llo) * i / (samples - 1.0));
        double u = seed_point(s, g, z).u;
        double sign = u > 0.0 ? 1.0 : (u < 0.0 ? -1.0 : 0.0);
        if (sign == 0.0 || (prev_sign != 0.0 && sign != prev_sign))
            throw NodelessError("seed changes sign near z=" + std::to_string(z) +
                                " (epsilon=" + std::to_string(s.epsilon) +
                                ", ka/kb=" + std::to_string(s.ka / s.kb) + ")");
        prev_sign = sign;
    }
}

SeedSolution::SeedSolution(const SeedParams& s, double g)
    : p_(s), g_(g), missing_norm_(0.0) {
    validate(s, g);
    nodeless_scan(s, g);
    auto inv_u_sq = [this](double z) { return std::exp(-2.0 * log_abs_u(z)); };
    double total = integrate_semi_infinite(inv_u_sq, 0.0, 1e-13, 1e-12).value;
    missing_norm_ = 1.0 / std::sqrt(total);
}

SeedPoint SeedSolution::scaled(double z) const { return seed_point(p_, g_, z); }

double SeedSolution::log_abs_u(double z) const {
    SeedPoint p = scaled(z);
    if (p.u == 0.0) return -std::numeric_limits<double>::infinity();
    return p.log_scale + std::log(std::fabs(p.u));
}

double SeedSolution::u(double z) const {
    SeedPoint p = scaled(z);
    return p.u * checked_exp(p.log_scale, "SeedSolution::u");
}

double SeedSolution::u_prime(double z) const {
    SeedPoint p = scaled(z);
    return p.du * checked_exp(p.log_scale, "SeedSolution::u_prime");
}

double SeedSolution::w(double z) const {
    SeedPoint p = scaled(z);
    if (p.u == 0.0)
        throw DivergenceError("SeedSolution::w: seed vanished at z=" + std::to_string(z));
    return -p.du / p.u;
}

double SeedSolution::w_prime(double z) const {
    SeedPoint p = scaled(z);
    if (p.u == 0.0)
        throw DivergenceError("SeedSolution::w_prime: seed vanished at z=" +
                              std::to_string(z));
    double wz = -p.du / p.u;
    return -p.d2u / p.u + wz * wz;
}

double SeedSolution::f(double z) const { return 2.0 * w_prime(z); }

double seed_u(const SeedParams& s, double g, double z) {
    validate(s, g);
    SeedPoint p = seed_point(s, g, z);
    return p.u * checked_exp(p.log_scale, "seed_u");
}

double superpotential_w(const SeedParams& s, double g, double z) {
    validate(s, g);
    SeedPoint p = seed_point(s, g, z);
    if (p.u == 0.0)
        throw DivergenceError("superpotential_w: seed vanished at z=" +
                              std::to_string(z));
    return -p.du / p.u;
}

double deformation_f(const SeedParams& s, double g, double z) {
    validate(s, g);
    SeedPoint p = seed_point(s, g, z);
    if (p.u == 0.0)
        throw DivergenceError("deformation_f: seed vanished at z=" + std::to_string(z));
    double wz = -p.du / p.u;
    return 2.0 * (-p.d2u / p.u + wz * wz);
}

double potential_v2(const SeedSolution& seed, const ErmakovParams& erm,
                    double x, double t) {
    require_positive_z(x, "potential_v2");
    double s = sigma(t, erm);
    double g = seed.g();
    return x * x + g * (g + 1.0) / (x * x) + seed.f(x / s) / (s * s);
}

double potential_v2(const SeedParams& s, double g, const ErmakovParams& erm,
                    double x, double t) {
    require_positive_z(x, "potential_v2");
    double sg = sigma(t, erm);
    return x * x + g * (g + 1.0) / (x * x) +
           deformation_f(s, g, x / sg) / (sg * sg);
}

namespace {

ComplexField apply_first_order(const ComplexField& f, const SeedSolution& seed,
                               const ErmakovParams& erm, const SpatialGrid& grid,
                               double t, bool dagger) {
    if (static_cast<int>(f.size()) != grid.n)
        throw ValidationError("apply_a: field size does not match grid");
    double s = sigma(t, erm);
    double sd = sigma_dot(t, erm);
    auto d1 = derivative1(f, grid.dx());
    ComplexField out(grid.n);
    for (int k = 0; k < grid.n; ++k) {
        double x = grid.x(k);
        std::complex<double> wv(seed.w(x / s), -0.5 * sd * x);
        if (dagger)
            out[k] = -s * d1[k] + std::conj(wv) * f[k];
        else
            out[k] = s * d1[k] + wv * f[k];
    }
    return out;
}

} // namespace

ComplexField apply_a(const ComplexField& f, const SeedSolution& seed,
                     const ErmakovParams& erm, const SpatialGrid& grid,
                     double t) {
    return apply_first_order(f, seed, erm, grid, t, false);
}

ComplexField apply_a_dagger(const ComplexField& f, const SeedSolution& seed,
                            const ErmakovParams& erm, const SpatialGrid& grid,
                            double t) {
    return apply_first_order(f, seed, erm, grid, t, true);
}

ComplexField apply_hamiltonian2(const ComplexField& f, const SeedSolution& seed,
                                const ErmakovParams& erm,
                                const SpatialGrid& grid, double t) {
    if (static_cast<int>(f.size()) != grid.n)
        throw ValidationError("apply_hamiltonian2: field size does not match grid");
    auto d2 = derivative2(f, grid.dx());
    ComplexField out(grid.n);
    for (int k = 0; k < grid.n; ++k)
        out[k] = -d2[k] + potential_v2(seed, erm, grid.x(k), t) * f[k];
    return out;
}

} // namespace singosc
