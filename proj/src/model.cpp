#include "isgd/model.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "isgd/errors.hpp"

namespace isgd {
namespace {

// Smoothed hinge q(x): 0 below -mu, (x+mu)^2/(4 mu) on [-mu, mu], x above.
// Boundaries belong to the quadratic piece so the derivative is continuous
// and the second derivative is defined everywhere.
double smoothed_hinge(double x, double mu) {
    if (x < -mu) return 0.0;
    if (x > mu) return x;
    const double t = x + mu;
    return t * t / (4.0 * mu);
}

double smoothed_hinge_d1(double x, double mu) {
    if (x < -mu) return 0.0;
    if (x > mu) return 1.0;
    return (x + mu) / (2.0 * mu);
}

double smoothed_hinge_d2(double x, double mu) {
    if (x < -mu || x > mu) return 0.0;
    return 1.0 / (2.0 * mu);
}

}  // namespace

LossModel LossModel::linear_regression(int dim) {
    if (dim < 1) throw std::invalid_argument("linear_regression: dim must be positive");
    return LossModel(LossKind::LinearRegression, dim, 0.0, 0.0);
}

LossModel LossModel::smoothed_quantile(double alpha, double mu) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("smoothed_quantile: alpha in (0,1)");
    if (!(mu > 0.0)) throw std::invalid_argument("smoothed_quantile: mu > 0");
    return LossModel(LossKind::SmoothedQuantile, 1, alpha, mu);
}

LossModel LossModel::quadratic_toy() { return LossModel(LossKind::QuadraticToy, 1, 0.0, 0.0); }

LossModel LossModel::quartic_toy() { return LossModel(LossKind::QuarticToy, 1, 0.0, 0.0); }

void LossModel::check(const Sample& z, std::span<const double> theta) const {
    if (static_cast<int>(theta.size()) != dim_) throw DimensionMismatch("theta dimension mismatch");
    if (kind_ == LossKind::LinearRegression && static_cast<int>(z.covariates.size()) != dim_)
        throw DimensionMismatch("sample covariate dimension mismatch");
}

double LossModel::value(const Sample& z, std::span<const double> theta) const {
    check(z, theta);
    switch (kind_) {
        case LossKind::LinearRegression: {
            const double r = z.response - dot(z.covariates, theta);
            return 0.5 * r * r;
        }
        case LossKind::SmoothedQuantile: {
            const double x = theta[0] - z.scalar;
            return smoothed_hinge(x, mu_) - alpha_ * x;
        }
        case LossKind::QuadraticToy:
            return 0.5 * theta[0] * theta[0] + z.scalar * theta[0];
        case LossKind::QuarticToy: {
            const double t2 = theta[0] * theta[0];
            return 0.25 * t2 * t2 + z.scalar * theta[0];
        }
    }
    return 0.0;
}

void LossModel::grad(const Sample& z, std::span<const double> theta, std::span<double> out) const {
    check(z, theta);
    if (out.size() != theta.size()) throw DimensionMismatch("grad output dimension mismatch");
    switch (kind_) {
        case LossKind::LinearRegression: {
            const double r = dot(z.covariates, theta) - z.response;
            for (int i = 0; i < dim_; ++i) out[i] = r * z.covariates[i];
            break;
        }
        case LossKind::SmoothedQuantile:
            out[0] = smoothed_hinge_d1(theta[0] - z.scalar, mu_) - alpha_;
            break;
        case LossKind::QuadraticToy:
            out[0] = theta[0] + z.scalar;
            break;
        case LossKind::QuarticToy:
            out[0] = theta[0] * theta[0] * theta[0] + z.scalar;
            break;
    }
}

void LossModel::hessian(const Sample& z, std::span<const double> theta, Matrix& out) const {
    if (out.dim() != dim_) out = Matrix(dim_);
    else out *= 0.0;
    add_hessian(z, theta, out);
}

void LossModel::add_hessian(const Sample& z, std::span<const double> theta, Matrix& accum) const {
    check(z, theta);
    if (accum.dim() != dim_) throw DimensionMismatch("hessian accumulator dimension mismatch");
    switch (kind_) {
        case LossKind::LinearRegression:
            accum.add_outer(z.covariates);
            break;
        case LossKind::SmoothedQuantile:
            accum(0, 0) += smoothed_hinge_d2(theta[0] - z.scalar, mu_);
            break;
        case LossKind::QuadraticToy:
            accum(0, 0) += 1.0;
            break;
        case LossKind::QuarticToy:
            accum(0, 0) += 3.0 * theta[0] * theta[0];
            break;
    }
}

Matrix CovarianceSpec::materialize() const {
    Matrix s(dim);
    switch (kind) {
        case Kind::Identity:
            for (int i = 0; i < dim; ++i) s(i, i) = 1.0;
            break;
        case Kind::Toeplitz:
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) s(i, j) = std::pow(rho, std::abs(i - j));
            break;
        case Kind::EquiCorr:
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) s(i, j) = (i == j) ? 1.0 : rho;
            break;
    }
    return s;
}

LinearSampleGenerator::LinearSampleGenerator(const CovarianceSpec& spec, std::vector<double> theta_star,
                                             Rng rng)
    : theta_star_(std::move(theta_star)), iid_(spec.dim), rng_(rng) {
    if (spec.dim != static_cast<int>(theta_star_.size()))
        throw DimensionMismatch("theta_star dimension must match covariance spec");
    chol_ = cholesky_lower(spec.materialize());
}

void LinearSampleGenerator::next(Sample& out) {
    const int p = static_cast<int>(theta_star_.size());
    out.covariates.resize(p);
    for (int i = 0; i < p; ++i) iid_[i] = rng_.normal();
    // x = L u with L the Cholesky factor; O(p^2) per draw.
    for (int i = 0; i < p; ++i) {
        double s = 0.0;
        for (int j = 0; j <= i; ++j) s += chol_(i, j) * iid_[j];
        out.covariates[i] = s;
    }
    out.response = dot(out.covariates, theta_star_) + rng_.normal();
}

}  // namespace isgd
