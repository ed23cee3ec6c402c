#include "ggrey/processes.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "ggrey/errors.hpp"
#include "ggrey/specfun.hpp"
#include "ggrey/stats.hpp"
#include "detail/fft.hpp"
#include "detail/parallel.hpp"

namespace ggrey::processes {

namespace {

double double_factorial_odd(int n) {
    // (2n-1)!! = (2n)! / (n! 2^n)
    double r = 1.0;
    for (int i = 1; i <= n; ++i) r *= 2.0 * i - 1.0;
    return r;
}

// E[Y^n] for the tempered mixing variable; 1 in the degenerate rho = 1 case.
double mixing_moment(double rho, double theta, int n) {
    if (rho == 1.0) return 1.0;
    return specfun::meijer_g_moment(theta, n, rho) / specfun::upper_inc_gamma(rho, theta);
}

// Lower-triangular Cholesky factor of Sigma_alpha, with a diagonal jitter of
// at most 1e-12 * trace if plain factorization fails.
Eigen::MatrixXd cholesky_factor(const CovMatrix& cov) {
    Eigen::Map<const Eigen::MatrixXd> sigma(cov.a.data(), cov.n, cov.n);
    Eigen::LLT<Eigen::MatrixXd> llt(sigma);
    if (llt.info() == Eigen::Success) return llt.matrixL();

    const double jitter = 1e-12 * cov.trace();
    Eigen::MatrixXd shifted = sigma;
    shifted.diagonal().array() += jitter;
    llt.compute(shifted);
    if (llt.info() != Eigen::Success)
        throw numerical_error("cov_matrix: indefinite beyond jitter budget");
    return llt.matrixL();
}

struct CirculantPlan {
    std::size_t m = 0;        // embedding size (power of two)
    std::size_t n_steps = 0;  // increments actually used
    std::size_t offset = 0;   // grid starts at (offset+1) * delta
    std::vector<double> sqrt_lambda_scaled;  // sqrt(lambda_k / m), /2 split below
};

// The grid must be uniform with every point an integer multiple of the
// spacing. Returns offset q such that t_j = (q + 1 + j) * delta.
bool circulant_grid_layout(const TimeGrid& grid, std::size_t& offset) {
    if (!grid.is_uniform()) return false;
    const double delta = grid.spacing();
    const double q = grid[0] / delta - 1.0;
    const double qr = std::nearbyint(q);
    if (std::abs(q - qr) > 1e-9 * (1.0 + std::abs(q)) || qr < 0.0 || qr > 1u << 24)
        return false;
    offset = static_cast<std::size_t>(qr);
    return true;
}

// fGn autocovariance for textbook fBm with H = alpha/2 and spacing delta.
double fgn_cov(double alpha, double delta, double k) {
    return 0.5 * std::pow(delta, alpha) *
           (std::pow(std::abs(k + 1.0), alpha) - 2.0 * std::pow(std::abs(k), alpha) +
            std::pow(std::abs(k - 1.0), alpha));
}

CirculantPlan make_circulant_plan(double alpha, double delta, std::size_t n_steps) {
    auto lambda = detail::circulant_eigenvalues(alpha, delta, n_steps);
    const std::size_t m = lambda.size();
    double lmax = 0.0, lmin = 0.0;
    for (double l : lambda) {
        lmax = std::max(lmax, l);
        lmin = std::min(lmin, l);
    }
    if (lmin < -1e-8 * lmax)
        throw numerical_error("circulant embedding is not nonnegative definite");
    CirculantPlan plan;
    plan.m = m;
    plan.n_steps = n_steps;
    plan.sqrt_lambda_scaled.resize(m);
    for (std::size_t k = 0; k < m; ++k)
        plan.sqrt_lambda_scaled[k] =
            std::sqrt(std::max(0.0, lambda[k]) / static_cast<double>(m));
    return plan;
}

// One textbook-fBm path from the circulant plan; writes n_steps partial sums.
void circulant_path(const CirculantPlan& plan, Rng& rng, double scale, double* out,
                    std::size_t n_out, std::size_t offset) {
    const std::size_t m = plan.m;
    std::vector<std::complex<double>> a(m);
    const double inv_sqrt2 = 0.7071067811865475244008443621048490393;
    a[0] = plan.sqrt_lambda_scaled[0] * rng.normal();
    a[m / 2] = plan.sqrt_lambda_scaled[m / 2] * rng.normal();
    for (std::size_t k = 1; k < m / 2; ++k) {
        const double re = rng.normal() * inv_sqrt2;
        const double im = rng.normal() * inv_sqrt2;
        a[k] = plan.sqrt_lambda_scaled[k] * std::complex<double>(re, im);
        a[m - k] = std::conj(a[k]);
    }
    ggrey::detail::fft_inplace(a, false);
    double acc = 0.0;
    std::size_t j = 0;
    for (std::size_t i = 0; i < plan.n_steps && j < n_out; ++i) {
        acc += a[i].real();
        if (i >= offset) out[j++] = scale * acc;
    }
}

PathBatch sample_gaussian_mixture(const ModelParams& params, const TimeGrid& grid,
                                  std::size_t n_paths, std::uint64_t seed,
                                  PathMethod method, double gaussian_scale,
                                  bool with_mixing) {
    params.validate();
    if (n_paths < 1) throw std::invalid_argument("sample paths: n_paths must be >= 1");
    const std::size_t n = grid.size();

    std::size_t offset = 0;
    bool can_embed = circulant_grid_layout(grid, offset);
    bool use_circulant = false;
    switch (method) {
        case PathMethod::Cholesky:
            break;
        case PathMethod::Circulant:
            if (!can_embed)
                throw std::invalid_argument(
                    "circulant backend needs a uniform grid of spacing multiples");
            use_circulant = true;
            break;
        case PathMethod::Auto:
            use_circulant = can_embed && n >= 256;
            break;
    }

    CirculantPlan plan;
    Eigen::MatrixXd chol;
    if (use_circulant) {
        try {
            plan = make_circulant_plan(params.alpha, grid.spacing(), offset + n);
        } catch (const numerical_error&) {
            use_circulant = false;  // fall back to the exact factorization
        }
    }
    if (!use_circulant) chol = cholesky_factor(cov_matrix(grid, params.alpha));

    PathBatch batch;
    batch.grid = grid.points();
    batch.n_paths = n_paths;
    batch.seed = seed;
    batch.params = params;
    batch.values.assign(n_paths * n, 0.0);

    // Circulant synthesis produces textbook fBm; the kernel gamma_alpha is
    // twice that covariance.
    const double circulant_scale = gaussian_scale * std::sqrt(2.0);

    ggrey::detail::parallel_for(
        static_cast<std::int64_t>(n_paths), [&](std::int64_t lo, std::int64_t hi) {
            std::vector<double> z(n);
            for (std::int64_t p = lo; p < hi; ++p) {
                Rng rng = Rng::for_stream(seed, static_cast<std::uint64_t>(p));
                const double y =
                    with_mixing ? sample_mixing_y(params.rho, params.theta, rng) : 1.0;
                const double sy = std::sqrt(y);
                double* row = batch.values.data() + p * n;
                if (use_circulant) {
                    circulant_path(plan, rng, sy * circulant_scale, row, n, offset);
                } else {
                    for (std::size_t j = 0; j < n; ++j) z[j] = rng.normal();
                    for (std::size_t j = 0; j < n; ++j) {
                        double acc = 0.0;
                        for (std::size_t k = 0; k <= j; ++k) acc += chol(j, k) * z[k];
                        row[j] = sy * gaussian_scale * acc;
                    }
                }
            }
        });
    return batch;
}

} // namespace

void ModelParams::validate() const {
    if (!(alpha > 0.0) || !(alpha < 2.0))
        throw std::domain_error("ModelParams: alpha must be in (0,2)");
    if (!(rho > 0.0) || rho > 1.0)
        throw std::domain_error("ModelParams: rho must be in (0,1]");
    if (!(theta >= 0.0)) throw std::domain_error("ModelParams: theta must be >= 0");
}

TimeGrid::TimeGrid(std::vector<double> points) : t_(std::move(points)) {
    if (t_.empty()) throw std::invalid_argument("TimeGrid: empty grid");
    if (!(t_[0] > 0.0)) throw std::invalid_argument("TimeGrid: points must be > 0");
    for (std::size_t i = 1; i < t_.size(); ++i)
        if (!(t_[i] > t_[i - 1]))
            throw std::invalid_argument("TimeGrid: points must be strictly increasing");
}

TimeGrid TimeGrid::uniform(double start, double stop, int n) {
    if (n < 2) throw std::invalid_argument("TimeGrid::uniform: need n >= 2");
    std::vector<double> t(n);
    const double h = (stop - start) / (n - 1);
    for (int i = 0; i < n; ++i) t[i] = start + h * i;
    t.back() = stop;
    return TimeGrid(std::move(t));
}

TimeGrid TimeGrid::geometric(double start, double stop, int n) {
    if (n < 2) throw std::invalid_argument("TimeGrid::geometric: need n >= 2");
    if (!(start > 0.0)) throw std::invalid_argument("TimeGrid::geometric: start must be > 0");
    std::vector<double> t(n);
    const double r = std::log(stop / start) / (n - 1);
    for (int i = 0; i < n; ++i) t[i] = start * std::exp(r * i);
    t.back() = stop;
    return TimeGrid(std::move(t));
}

bool TimeGrid::is_uniform(double rel_tol) const {
    if (t_.size() < 2) return true;
    const double h = t_[1] - t_[0];
    for (std::size_t i = 1; i + 1 < t_.size(); ++i)
        if (std::abs((t_[i + 1] - t_[i]) - h) > rel_tol * h) return false;
    return true;
}

double CovMatrix::trace() const {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i * n + i];
    return s;
}

double kernel_gamma(double alpha, double t, double s) {
    if (t < 0.0 || s < 0.0) throw std::domain_error("kernel_gamma: t, s must be >= 0");
    return std::pow(t, alpha) + std::pow(s, alpha) - std::pow(std::abs(t - s), alpha);
}

CovMatrix cov_matrix(const TimeGrid& grid, double alpha) {
    const std::size_t n = grid.size();
    CovMatrix cov;
    cov.n = n;
    cov.a.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const double v = kernel_gamma(alpha, grid[i], grid[j]);
            cov.a[i * n + j] = v;
            cov.a[j * n + i] = v;
        }
    }
    return cov;
}

double sample_mixing_y(double rho, double theta, Rng& rng) {
    if (rho == 1.0) return 1.0;
    if (!(rho > 0.0) || !(rho < 1.0))
        throw std::domain_error("sample_mixing_y: rho must be in (0,1]");
    if (!(theta >= 0.0)) throw std::domain_error("sample_mixing_y: theta must be >= 0");

    if (theta == 0.0) {
        // u = 1 - 1/y maps the density to a Beta(rho, 1-rho) kernel, so
        // Y = 1/V with V ~ Beta(rho, 1-rho).
        return 1.0 / rng.beta(rho, 1.0 - rho);
    }

    // Acceptance rates: theta^(1-rho) e^theta Gamma(rho,theta) for the Gamma
    // proposal, e^theta Gamma(rho,theta) / Gamma(rho) for the theta = 0
    // proposal; the switchover picks the larger.
    const double switchover = std::pow(std::tgamma(rho), -1.0 / (1.0 - rho));
    if (theta >= switchover) {
        for (;;) {
            const double w = rng.gamma(1.0 - rho) / theta;
            if (rng.uniform() * (1.0 + w) < 1.0) return 1.0 + w;
        }
    }
    for (;;) {
        const double y = 1.0 / rng.beta(rho, 1.0 - rho);
        if (std::log(rng.uniform_open()) < -theta * (y - 1.0)) return y;
    }
}

PathBatch sample_ggbm_paths(const ModelParams& params, const TimeGrid& grid,
                            std::size_t n_paths, std::uint64_t seed, PathMethod method) {
    return sample_gaussian_mixture(params, grid, n_paths, seed, method, 1.0, true);
}

PathBatch sample_fbm_paths(double alpha, const TimeGrid& grid, std::size_t n_paths,
                           std::uint64_t seed, PathMethod method) {
    const ModelParams params{alpha, 1.0, 0.0};
    // Textbook covariance is gamma_alpha / 2.
    return sample_gaussian_mixture(params, grid, n_paths, seed, method,
                                   1.0 / std::sqrt(2.0), false);
}

double char_fn_ndim(const ModelParams& params, const TimeGrid& grid,
                    std::span<const double> xi) {
    params.validate();
    if (xi.size() != grid.size())
        throw std::invalid_argument("char_fn_ndim: |xi| must equal |grid|");
    double q = 0.0;
    for (std::size_t j = 0; j < xi.size(); ++j)
        for (std::size_t k = 0; k < xi.size(); ++k)
            q += xi[j] * xi[k] * kernel_gamma(params.alpha, grid[j], grid[k]);
    return specfun::upper_inc_gamma(params.rho, params.theta + 0.5 * q) /
           specfun::upper_inc_gamma(params.rho, params.theta);
}

double increment_char_fn(const ModelParams& params, double xi, double t, double s) {
    params.validate();
    if (t < 0.0 || s < 0.0) throw std::domain_error("increment_char_fn: t, s must be >= 0");
    const double u = 0.5 * xi * xi * std::pow(std::abs(t - s), params.alpha);
    return specfun::upper_inc_gamma(params.rho, params.theta + u) /
           specfun::upper_inc_gamma(params.rho, params.theta);
}

double analytic_moment(const ModelParams& params, double t, int k) {
    params.validate();
    if (k < 0) throw std::domain_error("analytic_moment: k must be >= 0");
    if (k % 2 == 1) return 0.0;
    if (k == 0) return 1.0;
    if (!params.has_finite_moments())
        throw std::domain_error("analytic_moment: moments need tempering (theta > 0)");
    const int n = k / 2;
    return double_factorial_odd(n) * std::pow(2.0 * std::pow(t, params.alpha), n) *
           mixing_moment(params.rho, params.theta, n);
}

double analytic_moment_paper(const ModelParams& params, double t, int k) {
    params.validate();
    if (k < 0) throw std::domain_error("analytic_moment_paper: k must be >= 0");
    if (k % 2 == 1) return 0.0;
    if (k == 0) return 1.0;
    if (!params.has_finite_moments())
        throw std::domain_error("analytic_moment_paper: moments need tempering (theta > 0)");
    const int n = k / 2;
    return 2.0 * std::pow(t, params.alpha * n) * mixing_moment(params.rho, params.theta, n);
}

double autocovariance(const ModelParams& params, double t, double s) {
    params.validate();
    if (!params.has_finite_moments())
        throw std::domain_error("autocovariance: needs tempering (theta > 0)");
    return mixing_moment(params.rho, params.theta, 1) * kernel_gamma(params.alpha, t, s);
}

ScalingFit holder_scaling_check(const ModelParams& params, std::uint64_t seed,
                                std::size_t n_paths) {
    params.validate();
    if (!params.has_finite_moments())
        throw std::domain_error("holder_scaling_check: needs tempering (theta > 0)");

    const int k_min = 1, k_max = 6;
    std::vector<double> points{1.0};
    for (int k = k_max; k >= k_min; --k) points.push_back(1.0 + std::pow(2.0, -k));
    const TimeGrid grid(std::move(points));

    const PathBatch batch = sample_ggbm_paths(params, grid, n_paths, seed);
    ScalingFit fit;
    std::vector<double> sq(n_paths);
    for (std::size_t j = 1; j < grid.size(); ++j) {
        for (std::size_t p = 0; p < n_paths; ++p) {
            const double d = batch.at(p, j) - batch.at(p, 0);
            sq[p] = d * d;
        }
        fit.log_delta.push_back(std::log(grid[j] - grid[0]));
        fit.log_msq.push_back(std::log(mean(sq)));
    }
    fit.slope = ols_slope(fit.log_delta, fit.log_msq);
    return fit;
}

namespace detail {

std::vector<double> circulant_eigenvalues(double alpha, double delta,
                                          std::size_t n_steps) {
    std::size_t m = 1;
    while (m < 2 * n_steps) m <<= 1;
    std::vector<std::complex<double>> row(m);
    for (std::size_t j = 0; j <= m / 2; ++j) row[j] = fgn_cov(alpha, delta, j);
    for (std::size_t j = m / 2 + 1; j < m; ++j) row[j] = row[m - j];
    ggrey::detail::fft_inplace(row, false);
    std::vector<double> lambda(m);
    for (std::size_t j = 0; j < m; ++j) lambda[j] = row[j].real();
    return lambda;
}

} // namespace detail

} // namespace ggrey::processes
