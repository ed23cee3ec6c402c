#pragma once

// Test-side numerical oracles, deliberately independent of the integrators
// and special functions in the library under test.

#include <cmath>
#include <functional>
#include <stdexcept>

namespace oracle {

// Recursive adaptive Simpson quadrature. The per-side tolerance decays by
// 1/sqrt(2) rather than 1/2 so slow corners (integrable kinks) refine
// geometrically instead of exploding into a full binary tree.
inline double simpson_step(const std::function<double(double)>& f, double a, double b,
                           double fa, double fm, double fb, double whole, double tol,
                           int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0) return left + right;
    if (std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    const double child_tol = std::max(tol * 0.70710678118654752, 1e-17);
    return simpson_step(f, a, m, fa, flm, fm, left, child_tol, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, child_tol, depth - 1);
}

inline double simpson(const std::function<double(double)>& f, double a, double b,
                      double tol = 1e-11, int depth = 40) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, b, fa, fm, fb, whole, tol, depth);
}

// Integral over [a,b] of f with f ~ (x-a)^(p-1) * smooth near a: substitute
// x = a + w^(1/p). The transformed integrand is continuous at w = 0 with a
// nonzero limit; evaluating it a hair inside the domain keeps Simpson's
// endpoint sample meaningful.
inline double simpson_singular_left(const std::function<double(double)>& f, double a,
                                    double b, double p, double tol = 1e-11) {
    const double inv_p = 1.0 / p;
    const double wmax = std::pow(b - a, p);
    const double wmin = 1e-13 * wmax;
    auto g = [&](double w) {
        w = std::max(w, wmin);
        return f(a + std::pow(w, inv_p)) * inv_p * std::pow(w, inv_p - 1.0);
    };
    return simpson(g, 0.0, wmax, tol);
}

inline double simpson_singular_right(const std::function<double(double)>& f, double a,
                                     double b, double p, double tol = 1e-11) {
    auto g = [&](double u) { return f(a + b - u); };
    return simpson_singular_left(g, a, b, p, tol);
}

// Tail integral over [a, inf) of an integrand decaying at least like
// e^(-rate x): direct integration out to where the envelope is far below
// double precision.
inline double simpson_to_inf(const std::function<double(double)>& f, double a,
                             double rate = 1.0, double tol = 1e-11) {
    return simpson(f, a, a + 80.0 / rate, tol);
}

// Tail integral over [a, inf), algebraic decay f ~ C x^(-1-q).
inline double simpson_to_inf_power(const std::function<double(double)>& f, double a,
                                   double q, double tol = 1e-11) {
    const double inv_q = 1.0 / q;
    const double vmin = 1e-13;
    auto g = [&](double v) {
        v = std::max(v, vmin);
        const double x = a * std::pow(v, -inv_q);
        return f(x) * (a * inv_q) * std::pow(v, -inv_q - 1.0);
    };
    return simpson(g, 0.0, 1.0, tol);
}

// Regularized incomplete beta I_x(a,b) by the standard continued fraction.
inline double betacf(double a, double b, double x) {
    const int maxit = 300;
    const double eps = 1e-15, fpmin = 1e-300;
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0, d = 1.0 - qab * x / qap;
    if (std::abs(d) < fpmin) d = fpmin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= maxit; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < eps) return h;
    }
    throw std::runtime_error("betacf: no convergence");
}

inline double inc_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double bt = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                               a * std::log(x) + b * std::log(1.0 - x));
    if (x < (a + 1.0) / (a + b + 2.0)) return bt * betacf(a, b, x) / a;
    return 1.0 - bt * betacf(b, a, 1.0 - x) / b;
}

// Standard normal CDF.
inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

// Central finite difference of order n (1 or 2) with step h.
inline double central_diff(const std::function<double(double)>& f, double x, double h,
                           int order = 1) {
    if (order == 1) return (f(x + h) - f(x - h)) / (2.0 * h);
    if (order == 2) return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
    throw std::invalid_argument("central_diff: order must be 1 or 2");
}

} // namespace oracle
