#pragma once

#include <memory>
#include <span>
#include <vector>

#include "isgd/matrix.hpp"
#include "isgd/rng.hpp"

namespace isgd {

/// One observation. Scalar losses use `scalar`; linear regression uses
/// (`response`, `covariates`). Kept as a flat struct so generators can fill
/// it in place without allocating inside the iteration loop.
struct Sample {
    double scalar = 0.0;
    double response = 0.0;
    std::vector<double> covariates;
};

enum class LossKind { LinearRegression, SmoothedQuantile, QuadraticToy, QuarticToy };

/// Loss oracle: value / gradient / Hessian of one sample function, plus the
/// parameters that pin down the smoothed quantile loss. Immutable, shareable.
class LossModel {
  public:
    static LossModel linear_regression(int dim);
    /// Pinball loss with the kink replaced by a quadratic on [-mu, mu];
    /// the gradient becomes (2 mu)^-1-Lipschitz.
    static LossModel smoothed_quantile(double alpha, double mu);
    static LossModel quadratic_toy();
    static LossModel quartic_toy();

    LossKind kind() const { return kind_; }
    int dim() const { return dim_; }
    double quantile_alpha() const { return alpha_; }
    double quantile_mu() const { return mu_; }

    double value(const Sample& z, std::span<const double> theta) const;
    void grad(const Sample& z, std::span<const double> theta, std::span<double> out) const;
    void hessian(const Sample& z, std::span<const double> theta, Matrix& out) const;
    /// accum += hessian(z, theta); avoids a temporary in streaming sums.
    void add_hessian(const Sample& z, std::span<const double> theta, Matrix& accum) const;

  private:
    LossModel(LossKind kind, int dim, double alpha, double mu)
        : kind_(kind), dim_(dim), alpha_(alpha), mu_(mu) {}

    void check(const Sample& z, std::span<const double> theta) const;

    LossKind kind_;
    int dim_;
    double alpha_;
    double mu_;
};

/// Covariance design for the regression covariates; diagonal is always 1.
struct CovarianceSpec {
    enum class Kind { Identity, Toeplitz, EquiCorr };

    Kind kind = Kind::Identity;
    int dim = 1;
    double rho = 0.0;

    Matrix materialize() const;
};

class SampleGenerator {
  public:
    virtual ~SampleGenerator() = default;
    virtual void next(Sample& out) = 0;
};

/// y = x^T theta_star + eps, x ~ N(0, Sigma) via a precomputed Cholesky
/// factor, eps ~ N(0,1) independent. Owns its rng; single-threaded use.
class LinearSampleGenerator final : public SampleGenerator {
  public:
    LinearSampleGenerator(const CovarianceSpec& spec, std::vector<double> theta_star, Rng rng);
    void next(Sample& out) override;

  private:
    Matrix chol_;
    std::vector<double> theta_star_;
    std::vector<double> iid_;
    Rng rng_;
};

enum class ScalarKind { QuantileStdNormal, ToyNormal };

/// Scalar normal draws: sigma = 1 for the quantile experiments, sigma = 4
/// for the toy losses.
class ScalarSampleGenerator final : public SampleGenerator {
  public:
    ScalarSampleGenerator(ScalarKind kind, Rng rng, double sigma = 4.0)
        : sigma_(kind == ScalarKind::QuantileStdNormal ? 1.0 : sigma), rng_(rng) {}
    void next(Sample& out) override { out.scalar = sigma_ * rng_.normal(); }

  private:
    double sigma_;
    Rng rng_;
};

/// z identically a constant; noise-free runs in tests and decay checks.
class ConstantSampleGenerator final : public SampleGenerator {
  public:
    explicit ConstantSampleGenerator(double value = 0.0) : value_(value) {}
    void next(Sample& out) override { out.scalar = value_; }

  private:
    double value_;
};

}  // namespace isgd
