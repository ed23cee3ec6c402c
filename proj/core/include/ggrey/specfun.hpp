#pragma once

#include "ggrey/quadrature.hpp"

namespace ggrey::specfun {

// Tolerances shared by the scalar special functions. All functions are pure
// in (arguments, config) and safe to call concurrently.
struct SpecFunConfig {
    double series_tol = 1e-16;
    int max_terms = 512;
    QuadratureSpec quad{};

    void validate() const {
        if (!(series_tol > 0.0))
            throw std::invalid_argument("SpecFunConfig: series_tol must be > 0");
        if (max_terms < 64)
            throw std::invalid_argument("SpecFunConfig: max_terms must be >= 64");
        quad.validate();
    }
};

const SpecFunConfig& default_config();

// 1/Gamma(z), entire in z; exactly zero at z = 0, -1, -2, ...
double reciprocal_gamma(double z);

// Upper incomplete gamma function Gamma(rho, x) = int_x^inf e^-w w^(rho-1) dw.
// Series for x < rho + 1, Lentz continued fraction otherwise.
double upper_inc_gamma(double rho, double x, const SpecFunConfig& cfg = default_config());

// Lower incomplete gamma function gamma(rho, x) = Gamma(rho) - Gamma(rho, x).
double lower_inc_gamma(double rho, double x, const SpecFunConfig& cfg = default_config());

// Three-parameter (Prabhakar) Mittag-Leffler function
//   E^gamma_{alpha,beta}(x) = sum_j (gamma)_j x^j / (j! Gamma(alpha j + beta)).
// beta <= 0 is allowed: pole terms vanish through the reciprocal gamma.
double prabhakar_ml(double alpha, double beta, double gamma, double x,
                    const SpecFunConfig& cfg = default_config());

// Two-parameter Mittag-Leffler E_{alpha,beta}(x) = E^1_{alpha,beta}(x).
double mittag_leffler(double alpha, double beta, double x,
                      const SpecFunConfig& cfg = default_config());

// rho-exponential e_rho^z = z^(rho-1) E_{rho,rho}(z^rho), z > 0, rho in (0,1].
double rho_exponential(double rho, double z, const SpecFunConfig& cfg = default_config());

// Closed-form value of the Mellin-Barnes kernel G^{2,0}_{1,2}[theta | 1-k; 0, rho-k]
// that equals Gamma(rho,theta) * E[Y^k] for the tempered mixing variable Y:
//   e^-theta / Gamma(1-rho) * sum_{j=0}^{k-1} C(k-1,j) Gamma(j+1-rho) theta^(rho-1-j).
double meijer_g_moment(double theta, int k, double rho);

// Unnormalized mixing density 1_{y>1} / (Gamma(1-rho) y (y-1)^rho);
// integrates to Gamma(rho) over (1, inf).
double f_rho_unnormalized(double y, double rho);

} // namespace ggrey::specfun
