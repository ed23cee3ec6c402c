#pragma once

#include <cmath>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

#include "ggrey/errors.hpp"

namespace ggrey {

// Parameters for the adaptive integrators below. Shared by every routine
// that needs a numerical integral (residual checks, mixture densities,
// oracle transforms).
struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 20000;

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
            throw std::invalid_argument("QuadratureSpec: tolerances must be positive");
        if (max_subdivisions < 1)
            throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 1");
    }
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
// Nodes are interior, so integrable endpoint singularities are never
// evaluated exactly at the singular point.
struct Gk15 {
    static constexpr double nodes[8] = {
        0.000000000000000000000000000000000e+00,
        2.077849550078984676006894037732449e-01,
        4.058451513773971669066064120769615e-01,
        5.860872354676911302941448382587296e-01,
        7.415311855993944398638647732807884e-01,
        8.648644233597690727897127886409262e-01,
        9.491079123427585245261896840478513e-01,
        9.914553711208126392068546975263285e-01};
    static constexpr double wk[8] = {
        2.094821410847278280129991748917143e-01,
        2.044329400752988924141619992346491e-01,
        1.903505780647854099132564024210137e-01,
        1.690047266392679028265834265985503e-01,
        1.406532597155259187451895905102379e-01,
        1.047900103222501838398763225415180e-01,
        6.309209262997855329070066318920429e-02,
        2.293532201052922496373200805896959e-02};
    static constexpr double wg[4] = {
        4.179591836734693877551020408163265e-01,
        3.818300505051189449503697754889751e-01,
        2.797053914892766679014677714237796e-01,
        1.294849661688696932706114326790820e-01};
};

// Returns {integral, error estimate}; error is +inf when the integrand
// produced non-finite values (signal to subdivide further).
template <class F>
std::pair<double, double> gk15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    const double f0 = f(c);
    double k = Gk15::wk[0] * f0;
    double g = Gk15::wg[0] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = h * Gk15::nodes[i];
        const double fs = f(c + dx) + f(c - dx);
        k += Gk15::wk[i] * fs;
        if (i % 2 == 0) g += Gk15::wg[i / 2] * fs;
    }
    k *= h;
    g *= h;
    if (!std::isfinite(k))
        return {0.0, std::numeric_limits<double>::infinity()};
    const double diff = std::abs(k - g);
    // Sharpened estimate as in QUADPACK: Kronrod is far more accurate than
    // the Gauss-Kronrod difference suggests once that difference is small.
    double err = diff;
    if (diff > 0.0) err = std::min(diff, std::pow(200.0 * diff, 1.5));
    return {k, err};
}

} // namespace detail

// Adaptive Gauss-Kronrod integration of f over the finite interval [a, b].
// The tolerance is distributed over subintervals in proportion to their
// length. Throws accuracy_error (with the partial sum) if the subdivision
// budget runs out or the integrand keeps returning non-finite values on an
// interval narrower than machine resolution.
template <class F>
double integrate(const F& f, double a, double b, const QuadratureSpec& spec = {}) {
    spec.validate();
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }

    struct Interval {
        double a, b, val, err;
        bool operator<(const Interval& o) const { return err < o.err; }
    };

    auto [v0, e0] = detail::gk15(f, a, b);
    std::priority_queue<Interval> work;
    work.push({a, b, v0, e0});
    double total = v0;
    double err_finite = std::isfinite(e0) ? e0 : 0.0;
    int n_unresolved = std::isfinite(e0) ? 0 : 1;
    const double min_width =
        16.0 * std::numeric_limits<double>::epsilon() * (std::abs(a) + std::abs(b) + (b - a));

    int splits = 0;
    while (!work.empty()) {
        if (n_unresolved == 0 &&
            err_finite <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total)))
            break;

        Interval iv = work.top();
        work.pop();
        if (iv.b - iv.a < min_width) {
            if (!std::isfinite(iv.err))
                throw accuracy_error("integrate: non-finite integrand at minimal width",
                                     sign * total);
            // Accept roundoff-limited intervals; a large error at minimal
            // width means a non-integrable (or mishandled) singularity.
            if (iv.err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) continue;
            throw accuracy_error("integrate: singularity unresolved at minimal width",
                                 sign * total);
        }
        if (++splits > spec.max_subdivisions)
            throw accuracy_error("integrate: subdivision budget exhausted", sign * total);

        const double m = 0.5 * (iv.a + iv.b);
        auto [vl, el] = detail::gk15(f, iv.a, m);
        auto [vr, er] = detail::gk15(f, m, iv.b);
        total += vl + vr - iv.val;

        if (std::isfinite(iv.err))
            err_finite = std::max(0.0, err_finite - iv.err);
        else
            --n_unresolved;
        for (double e : {el, er}) {
            if (std::isfinite(e))
                err_finite += e;
            else
                ++n_unresolved;
        }
        work.push({iv.a, m, vl, el});
        work.push({m, iv.b, vr, er});
    }
    return sign * total;
}

// Integral of f over [a, b] where f(x) ~ (x - a)^(p-1) * smooth, 0 < p <= 1.
// The substitution x = a + w^(1/p) flattens the singular factor exactly.
template <class F>
double integrate_singular_left(const F& f, double a, double b, double p,
                               const QuadratureSpec& spec = {}) {
    if (!(p > 0.0) || p > 1.0)
        throw std::invalid_argument("integrate_singular_left: exponent p must be in (0,1]");
    if (p == 1.0) return integrate(f, a, b, spec);
    const double inv_p = 1.0 / p;
    const double wmax = std::pow(b - a, p);
    auto g = [&](double w) {
        const double step = std::pow(w, inv_p);
        return f(a + step) * inv_p * std::pow(w, inv_p - 1.0);
    };
    return integrate(g, 0.0, wmax, spec);
}

// Mirror image: f(x) ~ (b - x)^(p-1) * smooth near b.
template <class F>
double integrate_singular_right(const F& f, double a, double b, double p,
                                const QuadratureSpec& spec = {}) {
    auto g = [&](double u) { return f(a + b - u); };
    return integrate_singular_left(g, a, b, p, spec);
}

// Integral over [a, b] with algebraic endpoint singularities at both ends:
// f ~ (x-a)^(pa-1) near a and (b-x)^(pb-1) near b. Split at the midpoint.
template <class F>
double integrate_singular_both(const F& f, double a, double b, double pa, double pb,
                               const QuadratureSpec& spec = {}) {
    const double m = 0.5 * (a + b);
    return integrate_singular_left(f, a, m, pa, spec) +
           integrate_singular_right(f, m, b, pb, spec);
}

// Integral of f over [a, +inf) for integrands decaying at least like
// e^(-rate x). Maps the tail with x = a - log(1 - u) / rate; a slower true
// decay than `rate` leaves an endpoint singularity the subdivision cannot
// resolve, so pass the actual exponential rate.
template <class F>
double integrate_to_inf(const F& f, double a, const QuadratureSpec& spec = {},
                        double rate = 1.0) {
    if (!(rate > 0.0)) throw std::invalid_argument("integrate_to_inf: rate must be > 0");
    auto g = [&](double u) {
        const double om = 1.0 - u;
        return f(a - std::log(om) / rate) / (rate * om);
    };
    return integrate(g, 0.0, 1.0, spec);
}

// Integral of f over [a, +inf), a > 0, for integrands with an algebraic tail
// f(x) ~ C x^(-1-q), q > 0. The substitution x = a v^(-1/q) turns the tail
// into a bounded integrand on (0, 1].
template <class F>
double integrate_to_inf_power(const F& f, double a, double q,
                              const QuadratureSpec& spec = {}) {
    if (!(a > 0.0)) throw std::invalid_argument("integrate_to_inf_power: a must be > 0");
    if (!(q > 0.0)) throw std::invalid_argument("integrate_to_inf_power: q must be > 0");
    const double inv_q = 1.0 / q;
    auto g = [&](double v) {
        const double x = a * std::pow(v, -inv_q);
        return f(x) * (a * inv_q) * std::pow(v, -inv_q - 1.0);
    };
    return integrate(g, 0.0, 1.0, spec);
}

} // namespace ggrey
