#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ggrey/quadrature.hpp"

using namespace ggrey;

TEST_CASE("polynomial and trig integrals") {
    CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, M_PI) ==
          doctest::Approx(2.0).epsilon(1e-13));
    CHECK(integrate([](double x) { return std::exp(-x); }, 2.0, 0.0) ==
          doctest::Approx(-(1.0 - std::exp(-2.0))).epsilon(1e-13));
    CHECK(integrate([](double) { return 1.0; }, 1.0, 1.0) == 0.0);
}

TEST_CASE("integrable endpoint singularities") {
    // int_0^1 x^(p-1) dx = 1/p
    for (double p : {0.1, 0.3, 0.7}) {
        const double got = integrate_singular_left(
            [p](double x) { return std::pow(x, p - 1.0); }, 0.0, 1.0, p);
        CHECK(got == doctest::Approx(1.0 / p).epsilon(1e-11));
    }
    // int_0^1 (1-x)^(-1/2) dx = 2
    const double right = integrate_singular_right(
        [](double x) { return 1.0 / std::sqrt(1.0 - x); }, 0.0, 1.0, 0.5);
    CHECK(right == doctest::Approx(2.0).epsilon(1e-11));
    // Beta(1/2,1/2) = pi
    const double both = integrate_singular_both(
        [](double x) { return 1.0 / std::sqrt(x * (1.0 - x)); }, 0.0, 1.0, 0.5, 0.5);
    CHECK(both == doctest::Approx(M_PI).epsilon(1e-11));
}

TEST_CASE("tails") {
    CHECK(integrate_to_inf([](double x) { return std::exp(-x); }, 1.0) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    // int_1^inf x^(-5/2) dx = 2/3
    CHECK(integrate_to_inf_power([](double x) { return std::pow(x, -2.5); }, 1.0, 1.5) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-11));
}

TEST_CASE("subdivision budget failure carries a partial value") {
    QuadratureSpec tight;
    tight.abs_tol = 1e-15;
    tight.rel_tol = 1e-15;
    tight.max_subdivisions = 3;
    // Oscillatory integrand that cannot converge in three splits.
    CHECK_THROWS_AS(integrate([](double x) { return std::sin(50.0 * x * x); }, 0.0, 10.0,
                              tight),
                    accuracy_error);
}

TEST_CASE("non-integrable singularity is reported, not silently summed") {
    QuadratureSpec spec;
    spec.max_subdivisions = 200000;
    CHECK_THROWS_AS(integrate([](double x) { return 1.0 / x; }, 0.0, 1.0, spec),
                    accuracy_error);
}
