#include "ggrey/timechange.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ggrey/specfun.hpp"

namespace ggrey::timechange {

namespace {

void check_rho(double rho, const char* who) {
    if (!(rho > 0.0) || !(rho < 1.0))
        throw std::domain_error(std::string(who) + ": rho must be in (0,1)");
}

} // namespace

double density_y(double y, double t, double rho) {
    check_rho(rho, "density_y");
    if (!(t > 0.0)) throw std::domain_error("density_y: t must be > 0");
    if (y <= t) return 0.0;
    return std::pow(t, rho) /
           (std::tgamma(rho) * std::tgamma(1.0 - rho) * y * std::pow(y - t, rho));
}

double density_t(double t, double x, double rho) {
    check_rho(rho, "density_t");
    if (!(x > 0.0)) throw std::domain_error("density_t: x must be > 0");
    if (t <= 0.0 || t >= x) return 0.0;
    return std::pow(t, rho - 1.0) * std::pow(x - t, -rho) /
           (std::tgamma(rho) * std::tgamma(1.0 - rho));
}

std::vector<double> sample_y_path(double rho, const processes::TimeGrid& grid, Rng& rng) {
    check_rho(rho, "sample_y_path");
    const double y = processes::sample_mixing_y(rho, 0.0, rng);
    std::vector<double> path(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) path[i] = grid[i] * y;
    return path;
}

double sample_t(double x, double rho, Rng& rng) {
    check_rho(rho, "sample_t");
    if (x < 0.0) throw std::domain_error("sample_t: x must be >= 0");
    if (x == 0.0) return 0.0;
    return x * rng.beta(rho, 1.0 - rho);
}

double laplace_pairs(double rho, LaplacePair which, double s, double arg) {
    check_rho(rho, "laplace_pairs");
    switch (which) {
        case LaplacePair::HittingInTime:
            return specfun::prabhakar_ml(1.0, 1.0, rho, -s * arg);
        case LaplacePair::HittingInSpace: {
            if (!(arg > 0.0))
                throw std::domain_error("laplace_pairs: t must be > 0 for HittingInSpace");
            const double u = s * arg;
            return std::pow(u, rho - 1.0) * std::exp(-u) / std::tgamma(rho);
        }
        case LaplacePair::ClockInSpace: {
            if (!(arg > 0.0))
                throw std::domain_error("laplace_pairs: t must be > 0 for ClockInSpace");
            return specfun::upper_inc_gamma(rho, s * arg) / std::tgamma(rho);
        }
        case LaplacePair::ClockInTime:
            return rho * specfun::prabhakar_ml(1.0, 2.0, 1.0 + rho, -s * arg);
    }
    throw std::invalid_argument("laplace_pairs: unknown selector");
}

namespace {

template <class Density>
double pde_residual_impl(const Density& f, double rho,
                         std::span<const std::pair<double, double>> points, double step,
                         bool clock_form) {
    if (!(step > 0.0)) throw std::domain_error("pde_residual: step must be > 0");
    double worst = 0.0;
    for (const auto& [t, y] : points) {
        if (!(t > 4.0 * step) || !(y - t > 4.0 * step) || !(y > 0.0))
            throw std::domain_error("pde_residual: grid touches the singular set");
        const double dt = (f(t + step, y) - f(t - step, y)) / (2.0 * step);
        const double dy = (f(t, y + step) - f(t, y - step)) / (2.0 * step);
        const double v = f(t, y);
        const double zero_order =
            clock_form ? (rho / t - 1.0 / y) * v : ((rho - 1.0) / t) * v;
        worst = std::max(worst, std::abs(dt + dy - zero_order));
    }
    return worst;
}

} // namespace

double pde_residual_t(double rho, std::span<const std::pair<double, double>> points,
                      double step) {
    check_rho(rho, "pde_residual_t");
    auto f = [rho](double t, double y) { return density_t(t, y, rho); };
    return pde_residual_impl(f, rho, points, step, false);
}

double pde_residual_y(double rho, std::span<const std::pair<double, double>> points,
                      double step) {
    check_rho(rho, "pde_residual_y");
    // Arguments arrive as (t, y); the clock density is l(y, t).
    auto f = [rho](double t, double y) { return density_y(y, t, rho); };
    return pde_residual_impl(f, rho, points, step, true);
}

std::vector<std::pair<double, double>> interior_grid(double lo, double hi, int n_t,
                                                     int n_y) {
    if (!(0.0 < lo) || !(lo < hi) || !(hi < 1.0))
        throw std::invalid_argument("interior_grid: need 0 < lo < hi < 1");
    std::vector<std::pair<double, double>> pts;
    for (int iy = 0; iy < n_y; ++iy) {
        const double y = 1.0 + iy * (2.0 / std::max(1, n_y - 1));
        for (int it = 0; it < n_t; ++it) {
            const double frac = lo + (hi - lo) * it / std::max(1, n_t - 1);
            pts.emplace_back(frac * y, y);
        }
    }
    return pts;
}

} // namespace ggrey::timechange
