#pragma once

#include <span>
#include <vector>

#include "ggrey/rng.hpp"

namespace ggrey::measure {

// Parameters of the tempered measure: rho in (0,1], theta >= 0. Moment and
// Laplace operations additionally need theta > 0 when rho < 1.
struct GreyParams {
    double rho;
    double theta;

    void validate() const;
    bool has_finite_moments() const { return rho == 1.0 || theta > 0.0; }
};

// Monic polynomial in monomial basis; coeffs[k] multiplies x^k.
struct PolyCoeffs {
    std::vector<double> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double eval(double x) const;
};

// Characteristic function Gamma(rho, theta + ||xi||^2/2) / Gamma(rho, theta).
// Always in (0, 1]; equals 1 only at xi = 0.
double char_fn(const GreyParams& params, std::span<const double> xi);

// k-th moment of the one-dimensional measure. Odd moments vanish; even
// moments come from the Prabhakar closed form
//   (-1)^(n+1) (2n)! Gamma(rho) theta^(rho-n) E^rho_{1,rho+1-n}(-theta)
//     / (n! 2^n Gamma(rho,theta)),  k = 2n.
double moment(const GreyParams& params, int k);

// Independent route for the same quantity through the Gaussian variance
// mixture: E[x^(2n)] = (2n-1)!! E[Y^n] with E[Y^n] from the finite gamma sum.
double moment_oracle(const GreyParams& params, int k);

// Monic degree-n polynomial orthogonal under the measure, built by modified
// Gram-Schmidt on the monomials with moment inner products. Throws
// numerical_error when the Hankel moment matrix has condition > 1e12.
PolyCoeffs orthogonal_poly(const GreyParams& params, int n);

// Restricted-domain Laplace transform
//   E e^(lambda <x,phi>) = Gamma(rho, theta - lambda^2 ||phi||^2/2) / Gamma(rho,theta),
// defined for ||phi||^2 < 2 theta / lambda^2.
double laplace_transform(const GreyParams& params, std::span<const double> phi,
                         double lambda);

// Exact draw from the dim-dimensional measure: sqrt(Y) * z with z standard
// normal and Y the mixing variable (drawn first from the stream).
std::vector<double> sample(const GreyParams& params, int dim, Rng& rng);

} // namespace ggrey::measure
