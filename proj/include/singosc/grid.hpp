#pragma once

#include "singosc/errors.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <vector>

namespace singosc {

// Uniform grid on [x_min, x_max] with n points, x_min > 0 so the
// centrifugal term stays finite.
struct SpatialGrid {
    double x_min;
    double x_max;
    int n;

    SpatialGrid(double lo, double hi, int count) : x_min(lo), x_max(hi), n(count) {
        if (!(lo > 0.0) || !(hi > lo) || count < 8)
            throw ValidationError("SpatialGrid: need 0 < x_min < x_max and n >= 8");
    }

    double dx() const { return (x_max - x_min) / (n - 1); }
    double x(int i) const { return x_min + i * dx(); }

    std::vector<double> points() const {
        std::vector<double> p(n);
        for (int i = 0; i < n; ++i) p[i] = x(i);
        return p;
    }
};

// Fourth-order finite differences on a uniform grid; one-sided stencils of
// the same order at the edges.
template <class T>
std::vector<T> derivative1(const std::vector<T>& f, double h) {
    int n = static_cast<int>(f.size());
    if (n < 6) throw ValidationError("derivative1: need at least 6 samples");
    std::vector<T> d(n);
    d[0] = (-25.0 / 12.0 * f[0] + 4.0 * f[1] - 3.0 * f[2] + 4.0 / 3.0 * f[3] -
            0.25 * f[4]) / h;
    d[1] = (-0.25 * f[0] - 5.0 / 6.0 * f[1] + 1.5 * f[2] - 0.5 * f[3] +
            f[4] / 12.0) / h;
    for (int i = 2; i < n - 2; ++i)
        d[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h);
    d[n - 2] = (0.25 * f[n - 1] + 5.0 / 6.0 * f[n - 2] - 1.5 * f[n - 3] +
                0.5 * f[n - 4] - f[n - 5] / 12.0) / h;
    d[n - 1] = (25.0 / 12.0 * f[n - 1] - 4.0 * f[n - 2] + 3.0 * f[n - 3] -
                4.0 / 3.0 * f[n - 4] + 0.25 * f[n - 5]) / h;
    return d;
}

template <class T>
std::vector<T> derivative2(const std::vector<T>& f, double h) {
    int n = static_cast<int>(f.size());
    if (n < 6) throw ValidationError("derivative2: need at least 6 samples");
    double h2 = h * h;
    std::vector<T> d(n);
    d[0] = (15.0 / 4.0 * f[0] - 77.0 / 6.0 * f[1] + 107.0 / 6.0 * f[2] -
            13.0 * f[3] + 61.0 / 12.0 * f[4] - 5.0 / 6.0 * f[5]) / h2;
    d[1] = (5.0 / 6.0 * f[0] - 1.25 * f[1] - f[2] / 3.0 + 7.0 / 6.0 * f[3] -
            0.5 * f[4] + f[5] / 12.0) / h2;
    for (int i = 2; i < n - 2; ++i)
        d[i] = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] -
                f[i + 2]) / (12.0 * h2);
    d[n - 2] = (5.0 / 6.0 * f[n - 1] - 1.25 * f[n - 2] - f[n - 3] / 3.0 +
                7.0 / 6.0 * f[n - 4] - 0.5 * f[n - 5] + f[n - 6] / 12.0) / h2;
    d[n - 1] = (15.0 / 4.0 * f[n - 1] - 77.0 / 6.0 * f[n - 2] +
                107.0 / 6.0 * f[n - 3] - 13.0 * f[n - 4] +
                61.0 / 12.0 * f[n - 5] - 5.0 / 6.0 * f[n - 6]) / h2;
    return d;
}

// Ratio of the second-order and fourth-order second-derivative results,
// used to flag grids too coarse for the requested field.  Returns the
// max-norm relative discrepancy over the interior.
template <class T>
double stencil_discrepancy(const std::vector<T>& f, double h) {
    int n = static_cast<int>(f.size());
    if (n < 8) throw ValidationError("stencil_discrepancy: need at least 8 samples");
    auto d4 = derivative2(f, h);
    double worst = 0.0, scale = 0.0;
    for (int i = 2; i < n - 2; ++i) scale = std::max(scale, std::abs(d4[i]));
    if (scale == 0.0) return 0.0;
    for (int i = 2; i < n - 2; ++i) {
        T d2 = (f[i - 1] - 2.0 * f[i] + f[i + 1]) / (h * h);
        worst = std::max(worst, std::abs(d2 - d4[i]) / scale);
    }
    return worst;
}

// Composite Simpson weightings on a uniform grid; even sample counts close
// with a 3/8 panel.  O(h^4) for smooth integrands.
template <class T>
T simpson(const std::vector<T>& f, double h) {
    int n = static_cast<int>(f.size());
    if (n < 5) throw ValidationError("simpson: need at least 5 samples");
    int m = (n % 2 == 1) ? n : n - 3;
    T total = f[0] + f[m - 1];
    for (int i = 1; i < m - 1; i += 2) total += 4.0 * f[i];
    for (int i = 2; i < m - 1; i += 2) total += 2.0 * f[i];
    total = total * (h / 3.0);
    if (n % 2 == 0)
        total += (f[n - 4] + 3.0 * f[n - 3] + 3.0 * f[n - 2] + f[n - 1]) *
                 (3.0 * h / 8.0);
    return total;
}

using ComplexField = std::vector<std::complex<double>>;

// integral of conj(f) * h over the grid span.
inline std::complex<double> grid_inner(const ComplexField& f,
                                       const ComplexField& h, double dx) {
    if (f.size() != h.size())
        throw ValidationError("grid_inner: size mismatch");
    ComplexField prod(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) prod[i] = std::conj(f[i]) * h[i];
    return simpson(prod, dx);
}

// max |f| over the samples.
inline double field_max(const ComplexField& f) {
    double m = 0.0;
    for (const auto& v : f) m = std::max(m, std::abs(v));
    return m;
}

} // namespace singosc
