#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "isgd/model.hpp"

namespace isgd {

/// Output of the generic implicit solve. `residual` is the norm of the
/// defect theta_next - theta + gamma * grad(z, theta_next).
struct ProxResult {
    std::vector<double> theta_next;
    double residual = 0.0;
    int iterations = 0;
};

struct MaxIterExceeded : std::runtime_error {
    MaxIterExceeded(const std::string& what, ProxResult best_so_far)
        : std::runtime_error(what), best(std::move(best_so_far)) {}
    ProxResult best;
};

/// prox of (1/2) t^2 + z t at step gamma: (theta - gamma z) / (1 + gamma).
double prox_quadratic_toy(double z, double gamma, double theta);

/// Rank-one implicit solve for the squared-error loss; exact.
void prox_linear_regression(double y, std::span<const double> x, double gamma,
                            std::span<const double> theta, std::span<double> out);

/// Exact prox of the smoothed pinball loss by case analysis on its three
/// pieces; the piecewise-linear stationarity equation has exactly one
/// consistent piece.
double prox_smoothed_quantile(double z, double alpha, double mu, double gamma, double theta);

/// Damped Newton on F(t) = t - theta + gamma * grad(z, t) with Jacobian
/// I + gamma * hessian(z, t), warm-started at the explicit-SGD point.
ProxResult prox_generic_newton(const LossModel& model, const Sample& z, double gamma,
                               std::span<const double> theta, double tol = 1e-12,
                               int max_iter = 100);

}  // namespace isgd
