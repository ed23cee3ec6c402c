#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ggrey/processes.hpp"
#include "ggrey/rng.hpp"

namespace ggrey::timechange {

// Transition density of the random clock Y_rho(t), supported on y > t:
//   l_rho(y,t) = t^rho / (Gamma(rho) Gamma(1-rho) y (y-t)^rho).
// Self-similar with unit scaling; its space-Laplace transform is
// Gamma(rho, eta t) / Gamma(rho).
double density_y(double y, double t, double rho);

// Transition density of the hitting time T_rho(x), supported on 0 < t < x:
//   h_rho(t,x) = t^(rho-1) (x-t)^(-rho) / (Gamma(rho) Gamma(1-rho)).
// rho = 1/2 is the arcsine law on (0, x).
double density_t(double t, double x, double rho);

// One path of the clock on a grid. The n-times Laplace transform depends on
// (eta, t) only through sum eta_k t_k, which forces Y_rho(t) = t * Y for a
// single draw Y; increments are then >= the time elapsed, exactly.
std::vector<double> sample_y_path(double rho, const processes::TimeGrid& grid, Rng& rng);

// Exact hitting-time draw: T = x * V with V ~ Beta(rho, 1-rho).
double sample_t(double x, double rho, Rng& rng);

// The four Laplace transforms of the two densities.
enum class LaplacePair {
    HittingInTime,   // E e^(-xi T(y))            = E^rho_{1,1}(-xi y)
    HittingInSpace,  // int e^(-eta y) h(t,y) dy  = (eta t)^(rho-1) e^(-eta t) / Gamma(rho)
    ClockInSpace,    // int e^(-eta y) l(y,t) dy  = Gamma(rho, eta t) / Gamma(rho)
    ClockInTime,     // int e^(-xi t) l(y,t) dt   = rho E^(1+rho)_{1,2}(-y xi)
};

// Evaluates the selected transform at transform variable `s` with the other
// argument held at `arg` (y for the time transforms, t for the space ones).
double laplace_pairs(double rho, LaplacePair which, double s, double arg);

// Finite-difference residual of the first-order PDE satisfied by h_rho:
//   d_t h = -d_y h + ((rho-1)/t) h.
// Central differences with the given step over interior (t, y) points; all
// points must stay 4*step away from the singular set {t=0, t=y}.
double pde_residual_t(double rho, std::span<const std::pair<double, double>> points,
                      double step);

// Same for the clock density: d_t l = -d_y l + [rho/t - 1/y] l, with points
// given as (t, y), y > t.
double pde_residual_y(double rho, std::span<const std::pair<double, double>> points,
                      double step);

// Default interior residual grid {(t, y): lo*y <= t <= hi*y} for the
// hitting-time PDE (and, with roles swapped, the clock PDE).
std::vector<std::pair<double, double>> interior_grid(double lo, double hi, int n_t,
                                                     int n_y);

} // namespace ggrey::timechange
