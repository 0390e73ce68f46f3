#include "singosc/quadrature.hpp"
#include "singosc/errors.hpp"

#include <cmath>
#include <queue>
#include <vector>

namespace singosc {

namespace {

// Kronrod 15 abscissae (positive half) and weights; every second node is a
// Gauss 7 node.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment eval_gk(const std::function<double(double)>& f, double a, double b) {
    double c = 0.5 * (a + b);
    double h = 0.5 * (b - a);
    double fc = f(c);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        double fl = f(c - h * kXgk[j]);
        double fr = f(c + h * kXgk[j]);
        resk += kWgk[j] * (fl + fr);
        if (j % 2 == 1) resg += kWg[j / 2] * (fl + fr);
    }
    double value = resk * h;
    double error = std::fabs((resk - resg) * h);
    return {a, b, value, error};
}

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol, double rel_tol) {
    if (a == b) return {0.0, 0.0, 0};
    std::priority_queue<Segment> queue;
    Segment s0 = eval_gk(f, a, b);
    double total = s0.value;
    double err = s0.error;
    int evals = 15;
    queue.push(s0);
    const int max_evals = 2'000'000;
    while (err > std::max(abs_tol, rel_tol * std::fabs(total))) {
        if (evals >= max_evals || queue.empty())
            throw ConvergenceError("integrate: adaptive refinement stalled, error " +
                                   std::to_string(err));
        Segment worst = queue.top();
        queue.pop();
        double mid = 0.5 * (worst.a + worst.b);
        if (mid == worst.a || mid == worst.b)
            throw ConvergenceError("integrate: interval collapsed before tolerance met");
        Segment left = eval_gk(f, worst.a, mid);
        Segment right = eval_gk(f, mid, worst.b);
        evals += 30;
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
    }
    return {total, err, evals};
}

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double a, double abs_tol,
                                         double rel_tol) {
    double total = 0.0, err = 0.0;
    int evals = 0;
    double lo = a;
    double width = 4.0;
    // Panel tolerances slightly tighter than the requested total.
    double panel_abs = 0.25 * abs_tol;
    for (int panel = 0; panel < 64; ++panel) {
        QuadratureResult r = integrate(f, lo, lo + width, panel_abs, rel_tol);
        total += r.value;
        err += r.error_estimate;
        evals += r.evaluations;
        bool tail_negligible =
            std::fabs(r.value) <=
            std::max(panel_abs, 0.25 * rel_tol * std::fabs(total));
        if (panel > 0 && tail_negligible) return {total, err, evals};
        lo += width;
        width *= 1.5;
    }
    throw ConvergenceError("integrate_semi_infinite: tail did not decay");
}

} // namespace singosc
