#include "isgd/prox.hpp"

#include <cmath>

#include "isgd/errors.hpp"
#include "isgd/matrix.hpp"

namespace isgd {

double prox_quadratic_toy(double z, double gamma, double theta) {
    return (theta - gamma * z) / (1.0 + gamma);
}

void prox_linear_regression(double y, std::span<const double> x, double gamma,
                            std::span<const double> theta, std::span<double> out) {
    if (x.size() != theta.size() || out.size() != theta.size())
        throw DimensionMismatch("prox_linear_regression dimension mismatch");
    const double xx = dot(x, x);
    const double scale = gamma * (dot(x, theta) - y) / (1.0 + gamma * xx);
    for (std::size_t i = 0; i < theta.size(); ++i) out[i] = theta[i] - scale * x[i];
}

double prox_smoothed_quantile(double z, double alpha, double mu, double gamma, double theta) {
    // Stationarity: q'(t - z) - alpha + (t - theta)/gamma = 0, with q' equal
    // to 0 / (x+mu)/(2mu) / 1 on the three pieces. Solve each linear piece
    // and keep the one whose solution lies in its own region.
    const double t_low = theta + gamma * alpha;  // piece x < -mu
    if (t_low - z < -mu) return t_low;
    const double t_high = theta - gamma * (1.0 - alpha);  // piece x > mu
    if (t_high - z > mu) return t_high;
    // quadratic piece, region is the closed band [z - mu, z + mu]
    const double denom = 1.0 / (2.0 * mu) + 1.0 / gamma;
    const double t_mid = (alpha + theta / gamma + (z - mu) / (2.0 * mu)) / denom;
    const double pad = 1e-9 * (mu + std::abs(t_mid) + std::abs(z));
    if (t_mid - z >= -mu - pad && t_mid - z <= mu + pad) return t_mid;
    throw std::logic_error("prox_smoothed_quantile: no consistent piece (implementation bug)");
}

ProxResult prox_generic_newton(const LossModel& model, const Sample& z, double gamma,
                               std::span<const double> theta, double tol, int max_iter) {
    const int p = model.dim();
    if (static_cast<int>(theta.size()) != p)
        throw DimensionMismatch("prox_generic_newton dimension mismatch");

    std::vector<double> t(theta.begin(), theta.end());
    std::vector<double> g(p), defect(p), step(p), trial(p), trial_defect(p);
    Matrix jac(p);

    auto eval_defect = [&](std::span<const double> point, std::span<double> out) {
        model.grad(z, point, g);
        for (int i = 0; i < p; ++i) out[i] = point[i] - theta[i] + gamma * g[i];
        return norm2(out);
    };

    // warm start at the explicit-SGD point theta - gamma grad(z, theta)
    model.grad(z, t, g);
    for (int i = 0; i < p; ++i) t[i] -= gamma * g[i];

    double defect_norm = eval_defect(t, defect);
    int iter = 0;
    while (defect_norm > tol) {
        if (!std::isfinite(defect_norm))
            throw NonFiniteEncountered("prox_generic_newton: non-finite defect");
        if (iter >= max_iter)
            throw MaxIterExceeded("prox_generic_newton: max iterations exceeded",
                                  ProxResult{t, defect_norm, iter});
        model.hessian(z, t, jac);
        jac *= gamma;
        for (int i = 0; i < p; ++i) jac(i, i) += 1.0;
        // Jacobian is SPD (convexity), so a Cholesky solve suffices.
        const Matrix l = cholesky_lower(jac);
        for (int i = 0; i < p; ++i) step[i] = defect[i];
        cholesky_solve(l, step);

        double damping = 1.0;
        double trial_norm = defect_norm;
        for (int halvings = 0; halvings < 60; ++halvings) {
            for (int i = 0; i < p; ++i) trial[i] = t[i] - damping * step[i];
            trial_norm = eval_defect(trial, trial_defect);
            if (trial_norm < defect_norm) break;
            damping *= 0.5;
        }
        t = trial;
        defect = trial_defect;
        defect_norm = trial_norm;
        ++iter;
    }
    return ProxResult{std::move(t), defect_norm, iter};
}

}  // namespace isgd
