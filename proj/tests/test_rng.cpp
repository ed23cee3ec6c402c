#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "ggrey/rng.hpp"
#include "ggrey/stats.hpp"

using namespace ggrey;

TEST_CASE("determinism and stream separation") {
    Rng a(42), b(42);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());

    Rng s0 = Rng::for_stream(7, 0);
    Rng s1 = Rng::for_stream(7, 1);
    int same = 0;
    for (int i = 0; i < 64; ++i)
        if (s0.next_u64() == s1.next_u64()) ++same;
    CHECK(same == 0);
}

TEST_CASE("uniform range") {
    Rng rng(1);
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("normal moments") {
    Rng rng(2);
    const std::size_t n = 200000;
    std::vector<double> x(n);
    for (auto& v : x) v = rng.normal();
    CHECK(std::abs(mean(x)) < 4.0 * standard_error(x));
    CHECK(variance(x) == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("gamma moments, both shape branches") {
    Rng rng(3);
    for (double shape : {0.4, 2.5}) {
        const std::size_t n = 200000;
        std::vector<double> x(n);
        for (auto& v : x) v = rng.gamma(shape);
        CHECK(std::abs(mean(x) - shape) < 4.0 * standard_error(x));
    }
}

TEST_CASE("beta stays in the open interval with the right mean") {
    Rng rng(4);
    const std::size_t n = 100000;
    std::vector<double> x(n);
    for (auto& v : x) {
        v = rng.beta(0.5, 0.5);
        CHECK(v > 0.0);
        CHECK(v < 1.0);
    }
    CHECK(std::abs(mean(x) - 0.5) < 4.0 * standard_error(x));
}

TEST_CASE("pairwise sum matches naive on benign data") {
    std::vector<double> v(1000);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = 1.0 / (i + 1.0);
    double naive = 0.0;
    for (double x : v) naive += x;
    CHECK(pairwise_sum(v) == doctest::Approx(naive).epsilon(1e-14));
}
