#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "singosc/ermakov.hpp"
#include "singosc/errors.hpp"
#include "singosc/quadrature.hpp"

#include <cmath>
#include <random>

using namespace singosc;

namespace {
const ErmakovParams kSets[] = {
    {1.0, 1.0, 0.0}, {2.0, 1.0, 0.0}, {1.0, 2.0, 0.0},
    {3.0, 2.0, 0.0}, {2.0, 1.0, 0.7}, {2.0, 0.5, -0.3},
};
}

TEST_CASE("parameter admissibility") {
    CHECK_NOTHROW(validate({1.0, 1.0, 0.0}));
    CHECK_NOTHROW(validate({2.0, 0.5, 0.0})); // boundary a*c = 1
    CHECK_THROWS_AS(validate({-1.0, 2.0, 0.0}), ValidationError);
    CHECK_THROWS_AS(validate({1.0, 0.0, 0.0}), ValidationError);
    CHECK_THROWS_AS(validate({0.5, 1.0, 0.0}), ValidationError);
    CHECK_THROWS_AS(validate({0.9, 1.1, 0.0}), ValidationError);
}

TEST_CASE("classical pair: oscillator equation and Wronskian") {
    const double h = 1e-4;
    for (const auto& p : kSets) {
        for (double t : {-1.0, 0.0, 0.4, 1.3, 2.9}) {
            auto cp = classical_pair(t, p);
            CHECK(cp.q1 * cp.q2_dot - cp.q2 * cp.q1_dot ==
                  doctest::Approx(2.0).epsilon(1e-14));
            // q'' from central differences of the closed form.
            auto q1 = [&](double s) { return classical_pair(s, p).q1; };
            auto q2 = [&](double s) { return classical_pair(s, p).q2; };
            double q1dd = (q1(t + h) - 2.0 * q1(t) + q1(t - h)) / (h * h);
            double q2dd = (q2(t + h) - 2.0 * q2(t) + q2(t - h)) / (h * h);
            CHECK(std::fabs(q1dd + 4.0 * cp.q1) < 1e-6);
            CHECK(std::fabs(q2dd + 4.0 * cp.q2) < 1e-6);
            // Derivative fields consistent with the functions.
            CHECK((q1(t + h) - q1(t - h)) / (2.0 * h) ==
                  doctest::Approx(cp.q1_dot).epsilon(1e-7));
            CHECK((q2(t + h) - q2(t - h)) / (2.0 * h) ==
                  doctest::Approx(cp.q2_dot).epsilon(1e-7));
        }
    }
}

TEST_CASE("sigma^2: positivity, period, closed-form minimum") {
    for (const auto& p : kSets) {
        double grid_min = 1e300;
        for (int i = 0; i <= 4000; ++i) {
            double t = p.t0 - 1.0 + i * (2.0 * M_PI) / 4000.0;
            double s = sigma_sq(t, p);
            CHECK(s > 0.0);
            grid_min = std::min(grid_min, s);
            CHECK(sigma_sq(t + M_PI / 2.0, p) == doctest::Approx(s).epsilon(1e-12));
        }
        CHECK(grid_min >= sigma_sq_min(p) - 1e-12);
        CHECK(grid_min == doctest::Approx(sigma_sq_min(p)).epsilon(1e-5));
    }
    // (a, c) = (2, 1): minimum is (3 - sqrt(5)) / 2.
    CHECK(sigma_sq_min({2.0, 1.0, 0.0}) ==
          doctest::Approx(0.3819660112501051518).epsilon(1e-14));
}

TEST_CASE("sigma^2 equals a q1^2 + c q2^2 + 2 sqrt(ac-1) q1 q2") {
    for (const auto& p : kSets) {
        double g = std::sqrt(p.a * p.c - 1.0);
        for (double t : {-0.7, 0.0, 0.31, 1.9, 4.4}) {
            auto cp = classical_pair(t, p);
            double via_pair =
                p.a * cp.q1 * cp.q1 + p.c * cp.q2 * cp.q2 + 2.0 * g * cp.q1 * cp.q2;
            CHECK(sigma_sq(t, p) == doctest::Approx(via_pair).epsilon(1e-13));
        }
    }
}

TEST_CASE("stationary choice a = c = 1 freezes the width") {
    ErmakovParams p{1.0, 1.0, 0.0};
    for (double t : {0.0, 0.1, 0.9, 2.2, 7.7}) {
        CHECK(sigma(t, p) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(std::fabs(sigma_dot(t, p)) < 1e-15);
        CHECK(ermakov_residual(t, p) < 1e-14);
    }
}

TEST_CASE("nonlinear width equation: residual vanishes") {
    for (const auto& p : kSets) {
        for (int i = 0; i < 100; ++i) {
            double t = p.t0 + i * M_PI / 99.0;
            CHECK(ermakov_residual(t, p) < 1e-10);
        }
    }
}

TEST_CASE("sigma derivatives match finite differences") {
    const double h = 1e-5;
    for (const auto& p : kSets) {
        for (double t : {-0.4, 0.23, 1.0, 2.6}) {
            double fd1 = (sigma(t - 2 * h, p) - 8 * sigma(t - h, p) +
                          8 * sigma(t + h, p) - sigma(t + 2 * h, p)) / (12 * h);
            CHECK(sigma_dot(t, p) == doctest::Approx(fd1).epsilon(1e-9));
            // Wider step for the second difference: roundoff scales as 1/h^2.
            const double h2 = 1e-3;
            double fd2 = (-sigma(t - 2 * h2, p) + 16 * sigma(t - h2, p) -
                          30 * sigma(t, p) + 16 * sigma(t + h2, p) -
                          sigma(t + 2 * h2, p)) / (12 * h2 * h2);
            CHECK(sigma_ddot(t, p) == doctest::Approx(fd2).epsilon(1e-8));
        }
    }
}

TEST_CASE("phase integral: quadrature oracle, anchor, monotonicity") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> tdist(-2.0, 7.0);
    for (const auto& p : kSets) {
        CHECK(phase_integral(p.t0, p) == 0.0);
        auto inv_s = [&](double s) { return 1.0 / sigma_sq(s, p); };
        for (int i = 0; i < 12; ++i) {
            double t = p.t0 + tdist(rng);
            double ref = integrate(inv_s, p.t0, t, 1e-12, 1e-12).value;
            CHECK(phase_integral(t, p) == doctest::Approx(ref).epsilon(1e-10));
        }
        // Strictly increasing: the integrand is positive.
        double prev = phase_integral(p.t0 - 1.0, p);
        for (int i = 1; i <= 300; ++i) {
            double t = p.t0 - 1.0 + i * 8.0 / 300.0;
            double cur = phase_integral(t, p);
            CHECK(cur > prev);
            prev = cur;
        }
    }
}

TEST_CASE("phase integral advances by pi/2 per width period") {
    for (const auto& p : kSets) {
        for (double t : {0.0, 0.37, 1.1, 3.0}) {
            double diff =
                phase_integral(t + M_PI / 2.0, p) - phase_integral(t, p);
            CHECK(diff == doctest::Approx(M_PI / 2.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("phase integral continuous through tangent poles") {
    // 2(t - t0) = pi/2 is a pole of the raw antiderivative.
    for (const auto& p : kSets) {
        double tc = p.t0 + M_PI / 4.0;
        double at = phase_integral(tc, p);
        CHECK(phase_integral(tc - 1e-9, p) == doctest::Approx(at).epsilon(1e-6));
        CHECK(phase_integral(tc + 1e-9, p) == doctest::Approx(at).epsilon(1e-6));
    }
}

TEST_CASE("phase integral derivative is the inverse squared width") {
    const double h = 1e-5;
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> times(-2.0, 4.0);
    for (const auto& p : kSets) {
        for (int i = 0; i < 100; ++i) {
            double t = times(rng);
            double fd = (phase_integral(t + h, p) - phase_integral(t - h, p)) /
                        (2.0 * h);
            CHECK(std::fabs(fd - 1.0 / sigma_sq(t, p)) < 1e-7);
        }
    }
}
