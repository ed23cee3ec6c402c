#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ggrey/rng.hpp"

namespace ggrey::processes {

// Model triple (alpha, rho, theta). alpha is the covariance-kernel exponent
// (Hurst parameter alpha/2), rho the distance from the Gaussian regime
// (rho = 1 is Gaussian), theta >= 0 the exponential tempering strength.
struct ModelParams {
    double alpha;
    double rho;
    double theta;

    void validate() const;
    // Moment and covariance formulas need tempering unless rho = 1.
    bool has_finite_moments() const { return rho == 1.0 || theta > 0.0; }
};

// Strictly increasing positive time points. t = 0 is excluded; the process
// is identically zero there.
class TimeGrid {
public:
    explicit TimeGrid(std::vector<double> points);
    static TimeGrid uniform(double start, double stop, int n);
    static TimeGrid geometric(double start, double stop, int n);

    std::size_t size() const { return t_.size(); }
    double operator[](std::size_t i) const { return t_[i]; }
    const std::vector<double>& points() const { return t_; }

    // Constant spacing within tolerance; required by the circulant backend.
    bool is_uniform(double rel_tol = 1e-9) const;
    double spacing() const { return t_.size() > 1 ? t_[1] - t_[0] : t_[0]; }

private:
    std::vector<double> t_;
};

// Symmetric covariance matrix gamma_alpha(t_j, t_k) on a grid (row-major).
struct CovMatrix {
    std::size_t n = 0;
    std::vector<double> a;

    double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
    double trace() const;
};

// A batch of sampled trajectories on a common grid. Path p occupies row p.
// Reproducible: identical (seed, params, grid, n_paths, method) give
// bit-identical values regardless of thread count.
struct PathBatch {
    std::vector<double> grid;
    std::size_t n_paths = 0;
    std::vector<double> values;  // n_paths x grid.size(), row-major
    std::uint64_t seed = 0;
    ModelParams params{};

    std::span<const double> path(std::size_t p) const {
        return {values.data() + p * grid.size(), grid.size()};
    }
    double at(std::size_t p, std::size_t j) const { return values[p * grid.size() + j]; }
};

enum class PathMethod {
    Auto,       // circulant on large uniform grids, Cholesky otherwise
    Cholesky,   // exact, any PSD grid
    Circulant,  // uniform grids whose points are integer multiples of the spacing
};

// Covariance kernel gamma_alpha(t,s) = t^alpha + s^alpha - |t-s|^alpha.
// Twice the textbook fBm covariance for H = alpha/2.
double kernel_gamma(double alpha, double t, double s);

// Covariance matrix on a grid. Guaranteed positive semidefinite up to
// roundoff; Cholesky consumers may add jitter up to 1e-12 * trace.
CovMatrix cov_matrix(const TimeGrid& grid, double alpha);

// Exact draw of the mixing variable Y > 1 with density
//   e^(-theta y) / (Gamma(rho,theta) Gamma(1-rho) y (y-1)^rho), y > 1.
// theta = 0 inverts a Beta(rho, 1-rho) variate; theta > 0 uses bounded
// rejection (Gamma proposal for theta above the switchover constant
// Gamma(rho)^(-1/(1-rho)), the theta = 0 law below it). rho = 1 returns the
// degenerate value 1 without consuming randomness.
double sample_mixing_y(double rho, double theta, Rng& rng);

// Variance-mixture path sampler: conditional on Y, paths are centered
// Gaussian with covariance Y * Sigma_alpha. Per path, the stream
// Rng::for_stream(seed, p) first draws Y, then the Gaussian factor.
PathBatch sample_ggbm_paths(const ModelParams& params, const TimeGrid& grid,
                            std::size_t n_paths, std::uint64_t seed,
                            PathMethod method = PathMethod::Auto);

// Textbook-convention fractional Brownian motion (Var X(t) = t^alpha,
// H = alpha/2); internally the same machinery scaled by sqrt(2).
PathBatch sample_fbm_paths(double alpha, const TimeGrid& grid, std::size_t n_paths,
                           std::uint64_t seed, PathMethod method = PathMethod::Auto);

// n-point characteristic function
//   Gamma(rho, theta + 1/2 sum_jk xi_j xi_k gamma_alpha(t_j,t_k)) / Gamma(rho,theta).
double char_fn_ndim(const ModelParams& params, const TimeGrid& grid,
                    std::span<const double> xi);

// Stationary-increment characteristic function
//   Gamma(rho, theta + xi^2 |t-s|^alpha / 2) / Gamma(rho,theta).
double increment_char_fn(const ModelParams& params, double xi, double t, double s);

// k-th order moment at time t; odd k gives 0. The mixture-exact value
//   (2n-1)!! (2 t^alpha)^n E[Y^n]  for k = 2n.
double analytic_moment(const ModelParams& params, double t, int k);

// Literal closed-form variant with prefactor 2 t^(alpha n); agrees with
// analytic_moment at n = 1 and differs by (2n)!/(2 n!) for n >= 2. Both are
// reported by the verification suite.
double analytic_moment_paper(const ModelParams& params, double t, int k);

// Autocovariance E[B(t)B(s)] = E[Y] gamma_alpha(t,s).
double autocovariance(const ModelParams& params, double t, double s);

struct ScalingFit {
    double slope = 0.0;
    std::vector<double> log_delta;
    std::vector<double> log_msq;
};

// Empirical increment-scaling exponent: regresses log E|B(t+d)-B(t)|^2 on
// log d over d = 2^-k. The slope estimates alpha.
ScalingFit holder_scaling_check(const ModelParams& params, std::uint64_t seed,
                                std::size_t n_paths = 100000);

namespace detail {
// Eigenvalues of the circulant embedding of the fGn covariance (H = alpha/2,
// n_steps increments of width delta). All must be >= 0 for the embedding to
// define a valid Gaussian synthesis.
std::vector<double> circulant_eigenvalues(double alpha, double delta, std::size_t n_steps);
} // namespace detail

} // namespace ggrey::processes
