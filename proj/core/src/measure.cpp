#include "ggrey/measure.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ggrey/errors.hpp"
#include "ggrey/processes.hpp"
#include "ggrey/specfun.hpp"

namespace ggrey::measure {

namespace {

double double_factorial_odd(int n) {
    double r = 1.0;
    for (int i = 1; i <= n; ++i) r *= 2.0 * i - 1.0;
    return r;
}

double norm_sq(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
}

void require_finite_moments(const GreyParams& p, const char* who) {
    if (!p.has_finite_moments())
        throw std::domain_error(std::string(who) +
                                ": moments need tempering (theta > 0) for rho < 1");
}

// Inner product of two monomial-coefficient vectors under the measure.
double poly_inner(const std::vector<double>& a, const std::vector<double>& b,
                  const std::vector<double>& moments) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0.0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0.0) s += a[i] * b[j] * moments[i + j];
    }
    return s;
}

} // namespace

void GreyParams::validate() const {
    if (!(rho > 0.0) || rho > 1.0)
        throw std::domain_error("GreyParams: rho must be in (0,1]");
    if (!(theta >= 0.0)) throw std::domain_error("GreyParams: theta must be >= 0");
}

double PolyCoeffs::eval(double x) const {
    double v = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) v = v * x + coeffs[k];
    return v;
}

double char_fn(const GreyParams& params, std::span<const double> xi) {
    params.validate();
    return specfun::upper_inc_gamma(params.rho, params.theta + 0.5 * norm_sq(xi)) /
           specfun::upper_inc_gamma(params.rho, params.theta);
}

double moment(const GreyParams& params, int k) {
    params.validate();
    if (k < 0) throw std::domain_error("moment: k must be >= 0");
    if (k % 2 == 1) return 0.0;
    if (k == 0) return 1.0;
    require_finite_moments(params, "moment");
    const int n = k / 2;
    if (params.theta == 0.0) return double_factorial_odd(n);  // rho = 1, Gaussian

    const double sign = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^(n+1)
    double fact_ratio = 1.0;                        // (2n)! / (n! 2^n) = (2n-1)!!
    for (int i = 1; i <= n; ++i) fact_ratio *= 2.0 * i - 1.0;
    const double prab =
        specfun::prabhakar_ml(1.0, params.rho + 1.0 - n, params.rho, -params.theta);
    return sign * fact_ratio * std::tgamma(params.rho) *
           std::pow(params.theta, params.rho - n) * prab /
           specfun::upper_inc_gamma(params.rho, params.theta);
}

double moment_oracle(const GreyParams& params, int k) {
    params.validate();
    if (k < 0) throw std::domain_error("moment_oracle: k must be >= 0");
    if (k % 2 == 1) return 0.0;
    if (k == 0) return 1.0;
    require_finite_moments(params, "moment_oracle");
    const int n = k / 2;
    const double ey_n =
        params.rho == 1.0
            ? 1.0
            : specfun::meijer_g_moment(params.theta, n, params.rho) /
                  specfun::upper_inc_gamma(params.rho, params.theta);
    return double_factorial_odd(n) * ey_n;
}

PolyCoeffs orthogonal_poly(const GreyParams& params, int n) {
    params.validate();
    if (n < 0) throw std::domain_error("orthogonal_poly: n must be >= 0");
    if (n > 0) require_finite_moments(params, "orthogonal_poly");

    std::vector<double> m(2 * n + 1);
    for (int k = 0; k <= 2 * n; ++k) m[k] = moment(params, k);

    // Condition of the (n+1)x(n+1) Hankel moment matrix gates the numerics.
    Eigen::MatrixXd hankel(n + 1, n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) hankel(i, j) = m[i + j];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hankel);
    const double lmin = es.eigenvalues().minCoeff();
    const double lmax = es.eigenvalues().maxCoeff();
    if (!(lmin > 0.0) || lmax / lmin > 1e12)
        throw numerical_error("orthogonal_poly: Hankel moment matrix is ill-conditioned");

    // Modified Gram-Schmidt over the monomials x^0..x^n.
    std::vector<std::vector<double>> basis;
    for (int d = 0; d <= n; ++d) {
        std::vector<double> p(d + 1, 0.0);
        p[d] = 1.0;
        for (int i = 0; i < d; ++i) {
            const double c =
                poly_inner(p, basis[i], m) / poly_inner(basis[i], basis[i], m);
            for (std::size_t j = 0; j < basis[i].size(); ++j) p[j] -= c * basis[i][j];
        }
        basis.push_back(std::move(p));
    }
    return PolyCoeffs{std::move(basis.back())};
}

double laplace_transform(const GreyParams& params, std::span<const double> phi,
                         double lambda) {
    params.validate();
    if (lambda == 0.0) throw std::domain_error("laplace_transform: lambda must be nonzero");
    require_finite_moments(params, "laplace_transform");
    const double shift = 0.5 * lambda * lambda * norm_sq(phi);
    if (shift > 0.0 && !(shift < params.theta))
        throw std::domain_error(
            "laplace_transform: ||phi||^2 must be < 2 theta / lambda^2 (integral diverges)");
    return specfun::upper_inc_gamma(params.rho, params.theta - shift) /
           specfun::upper_inc_gamma(params.rho, params.theta);
}

std::vector<double> sample(const GreyParams& params, int dim, Rng& rng) {
    params.validate();
    if (dim < 1) throw std::invalid_argument("sample: dim must be >= 1");
    const double y = processes::sample_mixing_y(params.rho, params.theta, rng);
    const double sy = std::sqrt(y);
    std::vector<double> x(dim);
    for (auto& v : x) v = sy * rng.normal();
    return x;
}

} // namespace ggrey::measure
