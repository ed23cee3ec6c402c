#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace ggrey {

// Pairwise (cascade) summation. Deterministic for a given element order,
// independent of threading, and accurate to O(log n) rounding growth.
inline double pairwise_sum(std::span<const double> x) {
    if (x.size() <= 8) {
        double s = 0.0;
        for (double v : x) s += v;
        return s;
    }
    const std::size_t half = x.size() / 2;
    return pairwise_sum(x.first(half)) + pairwise_sum(x.subspan(half));
}

inline double mean(std::span<const double> x) {
    return pairwise_sum(x) / static_cast<double>(x.size());
}

// Unbiased sample variance.
inline double variance(std::span<const double> x) {
    const double m = mean(x);
    std::vector<double> sq(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) sq[i] = (x[i] - m) * (x[i] - m);
    return pairwise_sum(sq) / static_cast<double>(x.size() - 1);
}

inline double standard_error(std::span<const double> x) {
    return std::sqrt(variance(x) / static_cast<double>(x.size()));
}

inline double covariance(std::span<const double> x, std::span<const double> y) {
    const double mx = mean(x), my = mean(y);
    std::vector<double> p(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) p[i] = (x[i] - mx) * (y[i] - my);
    return pairwise_sum(p) / static_cast<double>(x.size() - 1);
}

// One-sample Kolmogorov-Smirnov statistic against a CDF evaluated on the
// sorted sample. `cdf_at_sorted[i]` must correspond to `sorted[i]`.
inline double ks_statistic(std::span<const double> cdf_at_sorted) {
    const double n = static_cast<double>(cdf_at_sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < cdf_at_sorted.size(); ++i) {
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        d = std::max(d, std::max(cdf_at_sorted[i] - lo, hi - cdf_at_sorted[i]));
    }
    return d;
}

inline double ks_statistic(std::vector<double> sample,
                           const std::function<double(double)>& cdf) {
    std::sort(sample.begin(), sample.end());
    std::vector<double> c(sample.size());
    for (std::size_t i = 0; i < sample.size(); ++i) c[i] = cdf(sample[i]);
    return ks_statistic(std::span<const double>(c));
}

inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j])
            ++i;
        else
            ++j;
        const double fa = static_cast<double>(i) / static_cast<double>(a.size());
        const double fb = static_cast<double>(j) / static_cast<double>(b.size());
        d = std::max(d, std::abs(fa - fb));
    }
    return d;
}

// Asymptotic one-sample critical value; alpha = 0.01 gives c = 1.6276.
inline double ks_critical(std::size_t n, double c_alpha = 1.6276) {
    return c_alpha / std::sqrt(static_cast<double>(n));
}

inline double ks_two_sample_critical(std::size_t n, std::size_t m,
                                     double c_alpha = 1.6276) {
    const double nn = static_cast<double>(n), mm = static_cast<double>(m);
    return c_alpha * std::sqrt((nn + mm) / (nn * mm));
}

// Ordinary least squares slope of y against x.
inline double ols_slope(std::span<const double> x, std::span<const double> y) {
    const double mx = mean(x), my = mean(y);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

} // namespace ggrey
