#include "ggrey/governing.hpp"

#include <cmath>
#include <stdexcept>

#include "ggrey/specfun.hpp"

namespace ggrey::governing {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 6.283185307179586476925286766559005768;

// Untempered mixing density on tau > 1 (unit mass).
double mixing_density(double tau, double rho) {
    if (tau <= 1.0) return 0.0;
    return 1.0 / (std::tgamma(rho) * std::tgamma(1.0 - rho) * tau *
                  std::pow(tau - 1.0, rho));
}

double gauss_pdf(double x, double var) {
    return std::exp(-0.5 * x * x / var) / std::sqrt(kTwoPi * var);
}

// Mixture integral int_1^inf g(tau) l_rho(tau) dtau with the (tau-1)^-rho
// endpoint flattened by substitution and the algebraic tail (exponent
// 1 + rho + tail_decay) mapped to a bounded integrand.
template <class G>
double mixing_expectation(const G& g, double rho, double tail_decay,
                          const QuadratureSpec& quad) {
    auto f = [&](double tau) { return g(tau) * mixing_density(tau, rho); };
    return integrate_singular_left(f, 1.0, 2.0, 1.0 - rho, quad) +
           integrate_to_inf_power(f, 2.0, rho + tail_decay, quad);
}

// int_0^V v^(-1/2) e^(-c/v) dv  =  2 sqrt(V) e^(-c/V) - 2 sqrt(pi c) erfc(sqrt(c/V)).
double half_power_exp_integral(double c, double V) {
    if (c == 0.0) return 2.0 * std::sqrt(V);
    const double u = c / V;
    return 2.0 * std::sqrt(V) * std::exp(-u) -
           2.0 * std::sqrt(kPi * c) * std::erfc(std::sqrt(u));
}

} // namespace

void GoverningParams::validate() const {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::domain_error("GoverningParams: alpha must be in (0,1]");
    if (!(rho > 0.0) || rho > 1.0)
        throw std::domain_error("GoverningParams: rho must be in (0,1]");
}

double char_fn_1d(const GoverningParams& params, double xi, double t) {
    params.validate();
    if (!(t > 0.0)) throw std::domain_error("char_fn_1d: t must be > 0");
    return specfun::upper_inc_gamma(params.rho,
                                    0.5 * xi * xi * std::pow(t, params.alpha)) /
           std::tgamma(params.rho);
}

double integral_eq_residual(const GoverningParams& params, double xi, double t,
                            const QuadratureSpec& quad) {
    params.validate();
    if (!(t > 0.0)) throw std::domain_error("integral_eq_residual: t must be > 0");
    if (xi == 0.0) return 0.0;

    const double rho = params.rho;
    const double A = 0.5 * xi * xi;
    const double T = std::pow(t, params.alpha);
    const double gamma_rho = std::tgamma(rho);

    // After s -> u = t^a - s^a the equation reads
    //   Phi = 1 - A^rho int_0^T u^(rho-1) e^(-Au) E_{rho,rho}((Au)^rho)
    //             Gamma(rho, A(T-u))/Gamma(rho) du.
    auto g = [&](double u) {
        const double au = A * u;
        return std::exp(-au) * specfun::mittag_leffler(rho, rho, std::pow(au, rho)) *
               specfun::upper_inc_gamma(rho, A * (T - u)) / gamma_rho;
    };
    auto integrand = [&](double u) { return std::pow(u, rho - 1.0) * g(u); };
    const double integral = integrate_singular_left(integrand, 0.0, T, rho, quad);
    const double rhs = 1.0 - std::pow(A, rho) * integral;
    return std::abs(rhs - char_fn_1d(params, xi, t));
}

double fourier_pde_residual(const GoverningParams& params, double xi, double t,
                            const QuadratureSpec& quad) {
    params.validate();
    if (!(t > 0.0)) throw std::domain_error("fourier_pde_residual: t must be > 0");

    const double alpha = params.alpha;
    const double rho = params.rho;
    const double A = 0.5 * xi * xi;
    const double T = std::pow(t, alpha);
    const double X = A * T;
    const double gamma_rho = std::tgamma(rho);
    const double phi = specfun::upper_inc_gamma(rho, X) / gamma_rho;

    // Analytic time derivative of the characteristic function.
    const double dphi_dt =
        X == 0.0 ? 0.0 : -(alpha / t) * std::pow(X, rho) * std::exp(-X) / gamma_rho;

    // Memory integral int_0^t z^(a-1) Phi(xi,z) dz = (1/(a A)) int_0^X G(rho,y)/G(rho) dy.
    double memory = 0.0;
    if (X > 0.0) {
        auto g = [&](double y) { return specfun::upper_inc_gamma(rho, y) / gamma_rho; };
        memory = integrate(g, 0.0, X, quad) / (alpha * A);
    }

    const double rhs = (alpha * rho / t) * (phi - 1.0) -
                       0.5 * alpha * std::pow(t, alpha - 1.0) * xi * xi * phi +
                       (alpha * alpha * xi * xi / (2.0 * t)) * memory;
    return std::abs(dphi_dt - rhs);
}

double density_1d(const GoverningParams& params, double x, double t,
                  DensityConvention convention, const QuadratureSpec& quad) {
    params.validate();
    if (!(t > 0.0)) throw std::domain_error("density_1d: t must be > 0");
    const double T = std::pow(t, params.alpha);
    const double var_scale = convention == DensityConvention::Canonical ? T : 2.0 * T;
    if (params.rho == 1.0) return gauss_pdf(x, var_scale);
    auto g = [&](double tau) { return gauss_pdf(x, tau * var_scale); };
    return mixing_expectation(g, params.rho, 0.5, quad);
}

double density_memory_integral(const GoverningParams& params, double x, double t,
                               const QuadratureSpec& quad) {
    params.validate();
    if (!(t > 0.0)) throw std::domain_error("density_memory_integral: t must be > 0");
    const double T = std::pow(t, params.alpha);
    const double inv_alpha = 1.0 / params.alpha;
    if (params.rho == 1.0)
        return inv_alpha * half_power_exp_integral(0.5 * x * x, T) / std::sqrt(kTwoPi);
    auto g = [&](double tau) {
        return half_power_exp_integral(0.5 * x * x / tau, T) / std::sqrt(kTwoPi * tau);
    };
    return inv_alpha * mixing_expectation(g, params.rho, 0.5, quad);
}

namespace {

// d/dx of the mixture density (analytic differentiation under the integral).
double density_1d_dx(const GoverningParams& params, double x, double t,
                     DensityConvention convention, const QuadratureSpec& quad) {
    const double T = std::pow(t, params.alpha);
    const double vs = convention == DensityConvention::Canonical ? T : 2.0 * T;
    if (params.rho == 1.0) return -x / vs * gauss_pdf(x, vs);
    auto g = [&](double tau) {
        const double v = tau * vs;
        return -x / v * gauss_pdf(x, v);
    };
    return mixing_expectation(g, params.rho, 1.5, quad);
}

} // namespace

double density_fourier(const GoverningParams& params, double xi, double t,
                       DensityConvention convention, const QuadratureSpec& quad) {
    params.validate();
    if (!(t > 0.0)) throw std::domain_error("density_fourier: t must be > 0");
    if (xi == 0.0) {
        auto f = [&](double x) { return density_1d(params, x, t, convention, quad); };
        return 2.0 * (integrate(f, 0.0, 40.0 * std::sqrt(std::pow(t, params.alpha)), quad) +
                      integrate_to_inf_power(f, 40.0 * std::sqrt(std::pow(t, params.alpha)),
                                             2.0 * params.rho, quad));
    }
    const double axi = std::abs(xi);

    QuadratureSpec inner = quad;
    inner.abs_tol = std::min(quad.abs_tol, 1e-12);
    auto f = [&](double x) { return density_1d(params, x, t, convention, inner); };
    auto fprime = [&](double x) {
        return density_1d_dx(params, x, t, convention, inner);
    };

    // Truncate where the double integration-by-parts remainder |f'(X)|/xi^2
    // is negligible, snapping X to a zero of sin(xi x).
    const double tail_tol = 5e-9;
    double X = std::max(60.0, 16.0 * kPi / axi);
    while (2.0 * std::abs(fprime(X)) / (axi * axi) > tail_tol && X < 1e7) X *= 1.5;
    X = kPi * std::ceil(X * axi / kPi) / axi;  // sin(xi X) = 0

    QuadratureSpec outer = quad;
    outer.abs_tol = std::max(quad.abs_tol, 3e-9);
    outer.rel_tol = std::max(quad.rel_tol, 1e-8);
    auto osc = [&](double x) { return f(x) * std::cos(xi * x); };
    const double head = integrate(osc, 0.0, X, outer);
    const double tail =
        -f(X) * std::sin(axi * X) / axi - fprime(X) * std::cos(axi * X) / (axi * axi);
    return 2.0 * (head + tail);
}

double master_eq_residual(const GoverningParams& params, double x, double t,
                          double step, const QuadratureSpec& quad) {
    params.validate();
    if (x == 0.0)
        throw std::domain_error("master_eq_residual: x = 0 carries the initial atom");
    if (!(t > 0.0) || !(t > 2.0 * step))
        throw std::domain_error("master_eq_residual: t must exceed the step");

    QuadratureSpec tight = quad;
    tight.abs_tol = std::min(quad.abs_tol, 1e-13);
    tight.rel_tol = std::min(quad.rel_tol, 1e-11);

    const double alpha = params.alpha;
    auto f = [&](double xx, double tt) {
        return density_1d(params, xx, tt, DensityConvention::Canonical, tight);
    };
    // int_0^t z^a d_z f dz = t^a f(x,t) - a int_0^t z^(a-1) f dz.
    auto bracket = [&](double xx) {
        return std::pow(t, alpha) * f(xx, t) -
               alpha * density_memory_integral(params, xx, t, tight);
    };

    const double df_dt = (f(x, t + step) - f(x, t - step)) / (2.0 * step);
    const double d2_bracket =
        (bracket(x + step) - 2.0 * bracket(x) + bracket(x - step)) / (step * step);
    const double rhs =
        (alpha * params.rho / t) * f(x, t) + (alpha / (2.0 * t)) * d2_bracket;
    return std::abs(df_dt - rhs);
}

} // namespace ggrey::governing
