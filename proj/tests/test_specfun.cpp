#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ggrey/specfun.hpp"
#include "support/oracles.hpp"

using namespace ggrey;
using namespace ggrey::specfun;

namespace {
// Frozen oracle values (quadrature of the defining integrals / independent
// series summation, computed to 25 digits before the build).
constexpr double kUpperHalf1 = 0.27880558528066198;    // Gamma(1/2, 1)
constexpr double kUpperHalf2 = 0.080647117960317691;   // Gamma(1/2, 2)
constexpr double kUpperHalfHalf = 0.56241823159440712; // Gamma(1/2, 1/2)
constexpr double kMlHalfHalf1 = 5.5731696643100398;    // E_{1/2,1/2}(1)
constexpr double kMeijer125 = 0.55181916175716348;     // kernel at (theta,k,rho)=(1,2,1/2)
} // namespace

TEST_CASE("upper incomplete gamma: closed forms and frozen values") {
    for (double x : {0.0, 0.3, 1.0, 2.5, 7.0})
        CHECK(upper_inc_gamma(1.0, x) == doctest::Approx(std::exp(-x)).epsilon(1e-14));
    for (double rho : {0.3, 0.7, 1.4})
        CHECK(upper_inc_gamma(rho, 0.0) ==
              doctest::Approx(std::tgamma(rho)).epsilon(1e-15));

    CHECK(upper_inc_gamma(0.5, 1.0) == doctest::Approx(kUpperHalf1).epsilon(1e-13));
    CHECK(upper_inc_gamma(0.5, 1.0) ==
          doctest::Approx(std::sqrt(M_PI) * std::erfc(1.0)).epsilon(1e-13));
    CHECK(upper_inc_gamma(0.5, 2.0) == doctest::Approx(kUpperHalf2).epsilon(1e-13));
    CHECK(upper_inc_gamma(0.5, 0.5) == doctest::Approx(kUpperHalfHalf).epsilon(1e-13));
}

TEST_CASE("upper incomplete gamma: domain and monotonicity") {
    CHECK_THROWS_AS(upper_inc_gamma(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(upper_inc_gamma(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(upper_inc_gamma(0.5, -0.1), std::domain_error);

    for (double rho : {0.2, 0.5, 0.9}) {
        double prev = upper_inc_gamma(rho, 0.0);
        for (int i = 1; i <= 100; ++i) {
            const double cur = upper_inc_gamma(rho, 0.08 * i);
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("complementarity across the series/continued-fraction switchover") {
    for (double rho = 0.1; rho < 0.95; rho += 0.1)
        for (double x : {0.01, 0.3, 0.9, 1.1, 2.0, 5.0, 10.0}) {
            const double total = upper_inc_gamma(rho, x) + lower_inc_gamma(rho, x);
            CHECK(total == doctest::Approx(std::tgamma(rho)).epsilon(1e-13));
        }
}

TEST_CASE("lower incomplete gamma: examples and recurrence") {
    for (double rho : {0.4, 1.0, 2.3}) CHECK(lower_inc_gamma(rho, 0.0) == 0.0);
    for (double x : {0.2, 1.0, 4.0})
        CHECK(lower_inc_gamma(1.0, x) ==
              doctest::Approx(1.0 - std::exp(-x)).epsilon(1e-14));

    const double res = lower_inc_gamma(1.5, 2.0) - 0.5 * lower_inc_gamma(0.5, 2.0) +
                       std::pow(2.0, 0.5) * std::exp(-2.0);
    CHECK(std::abs(res) < 1e-12);
}

TEST_CASE("reciprocal gamma is entire with zeros at the poles") {
    CHECK(reciprocal_gamma(1.0) == doctest::Approx(1.0));
    CHECK(reciprocal_gamma(0.5) == doctest::Approx(1.0 / std::sqrt(M_PI)).epsilon(1e-14));
    CHECK(reciprocal_gamma(0.0) == 0.0);
    CHECK(reciprocal_gamma(-1.0) == 0.0);
    CHECK(reciprocal_gamma(-2.0) == 0.0);
    CHECK(reciprocal_gamma(-0.5) ==
          doctest::Approx(-1.0 / (2.0 * std::sqrt(M_PI))).epsilon(1e-13));
}

TEST_CASE("prabhakar series: exponential reductions") {
    for (double x : {-2.0, -0.5, 0.5, 2.0})
        CHECK(prabhakar_ml(1.0, 1.0, 1.0, x) == doctest::Approx(std::exp(x)).epsilon(1e-14));
    for (double rho : {0.3, 0.6, 0.9})
        for (double theta : {0.5, 1.0, 2.0})
            CHECK(prabhakar_ml(1.0, rho, rho, -theta) ==
                  doctest::Approx(std::exp(-theta) / std::tgamma(rho)).epsilon(1e-13));
}

TEST_CASE("prabhakar differentiation rule via finite differences") {
    const double alpha = 1.0, beta = 1.3, gamma = 0.7, lambda = -1.0, x = 0.8;
    auto f = [&](double u) {
        return std::pow(u, beta - 1.0) *
               prabhakar_ml(alpha, beta, gamma, lambda * std::pow(u, alpha));
    };
    const double fd = oracle::central_diff(f, x, 1e-5, 1);
    const double closed = std::pow(x, beta - 2.0) *
                          prabhakar_ml(alpha, beta - 1.0, gamma, lambda * std::pow(x, alpha));
    CHECK(fd == doctest::Approx(closed).epsilon(1e-6));
}

TEST_CASE("prabhakar complete monotonicity spot check") {
    const double rho = 0.5, h = 0.05;
    for (double x = 0.2; x <= 5.0; x += 0.3) {
        for (int k = 1; k <= 3; ++k) {
            double acc = 0.0;
            for (int j = 0; j <= k; ++j) {
                double ch = 1.0;
                for (int i = 0; i < j; ++i) ch = ch * (k - i) / (i + 1);
                acc += ((j % 2 == 0) ? 1.0 : -1.0) * ch *
                       prabhakar_ml(rho, rho, rho, -(x + j * h));
            }
            CHECK(((k % 2 == 0) ? 1.0 : -1.0) * acc >= -1e-9);
        }
    }
}

TEST_CASE("prabhakar non-convergence carries the partial sum") {
    SpecFunConfig cfg;
    cfg.max_terms = 64;
    try {
        (void)prabhakar_ml(1.0, 1.0, 1.0, -30.0, cfg);
        FAIL("expected accuracy_error");
    } catch (const accuracy_error& e) {
        CHECK(std::isfinite(e.partial()));
    }
}

TEST_CASE("rho-exponential") {
    for (double z : {0.3, 1.0, 2.5})
        CHECK(rho_exponential(1.0, z) == doctest::Approx(std::exp(z)).epsilon(1e-14));
    CHECK(rho_exponential(0.5, 1.0) == doctest::Approx(kMlHalfHalf1).epsilon(1e-12));
    for (double z : {0.1, 0.9, 3.0}) CHECK(rho_exponential(0.6, z) > 0.0);
    CHECK_THROWS_AS(rho_exponential(0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(rho_exponential(0.5, -1.0), std::domain_error);
}

TEST_CASE("mixing-moment kernel: closed forms") {
    for (double theta : {0.5, 1.0, 2.0})
        for (double rho : {0.3, 0.5, 0.8})
            CHECK(meijer_g_moment(theta, 1, rho) ==
                  doctest::Approx(std::pow(theta, rho - 1.0) * std::exp(-theta))
                      .epsilon(1e-14));
    CHECK(meijer_g_moment(1.0, 1, 0.5) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(meijer_g_moment(1.0, 2, 0.5) == doctest::Approx(kMeijer125).epsilon(1e-10));
}

TEST_CASE("mixing-moment kernel vs quadrature oracle on a 3x3x3 grid") {
    for (double theta : {0.5, 1.0, 2.0})
        for (int k : {1, 2, 3})
            for (double rho : {0.25, 0.5, 0.75}) {
                auto integrand = [&](double y) {
                    return std::pow(y, k - 1.0) * std::pow(y - 1.0, -rho) *
                           std::exp(-theta * y);
                };
                const double direct =
                    (oracle::simpson_singular_left(integrand, 1.0, 2.0, 1.0 - rho, 1e-12) +
                     oracle::simpson_to_inf(integrand, 2.0, 1e-12)) /
                    std::tgamma(1.0 - rho);
                CHECK(meijer_g_moment(theta, k, rho) ==
                      doctest::Approx(direct).epsilon(1e-9));
            }
}

TEST_CASE("unnormalized mixing density") {
    CHECK(f_rho_unnormalized(0.5, 0.3) == 0.0);
    CHECK(f_rho_unnormalized(1.0, 0.3) == 0.0);
    CHECK(f_rho_unnormalized(2.0, 0.5) ==
          doctest::Approx(1.0 / (2.0 * std::sqrt(M_PI))).epsilon(1e-15));

    for (double rho : {0.2, 0.5, 0.8}) {
        auto f = [&](double y) { return f_rho_unnormalized(y, rho); };
        const double mass = oracle::simpson_singular_left(f, 1.0, 2.0, 1.0 - rho, 1e-12) +
                            oracle::simpson_to_inf_power(f, 2.0, rho, 1e-12);
        CHECK(mass == doctest::Approx(std::tgamma(rho)).epsilon(1e-9));
    }
}
