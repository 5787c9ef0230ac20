#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "isgd/model.hpp"
#include "isgd/prox.hpp"

namespace isgd {

/// Schedule gamma_n = gamma1 * n^{-exponent}.
struct LearningRate {
    double gamma1 = 1.0;
    double exponent = 0.5;

    double step_size(std::int64_t n) const;
};

/// phi_gamma(n) = (n^{1-gamma} - 1)/(1 - gamma), log n at gamma = 1.
double phi(double gamma, std::int64_t n);

/// Iterate, iteration count, and the running post-burn-in average.
struct IsgdState {
    std::int64_t n = 0;
    std::vector<double> theta;
    std::vector<double> avg_sum;
    std::int64_t avg_count = 0;
    std::int64_t burn_in = 0;

    IsgdState(std::vector<double> theta0, std::int64_t burn_in_steps = 0);

    /// avg_sum / avg_count; throws NoAveragedIterates when empty.
    std::vector<double> averaged_iterate() const;
};

/// What sinks observe after each step. `theta_pre` is the iterate the step
/// started from (the inference accumulators evaluate there).
struct StepView {
    const IsgdState& state;
    const Sample& sample;
    std::span<const double> theta_pre;
    double gamma_n;
    bool post_burn_in;
};

class StepSink {
  public:
    virtual ~StepSink() = default;
    virtual void on_step(const StepView& view) = 0;
};

/// One implicit update: theta <- prox_{gamma_n l(z,.)}(theta), dispatching to
/// the closed-form solver where one exists. The pre-update iterate is copied
/// into `theta_pre`.
void isgd_step(IsgdState& state, const LossModel& model, const Sample& z, const LearningRate& lr,
               std::span<double> theta_pre);

/// Streaming driver: n_iters steps with fresh samples, burn-in floor
/// (burn_in_fraction * n_iters), every step forwarded to every sink with the
/// post_burn_in flag set for steps past the burn-in window.
IsgdState run(const LossModel& model, SampleGenerator& gen, const LearningRate& lr,
              std::int64_t n_iters, std::span<const double> theta0, double burn_in_fraction,
              std::span<StepSink* const> sinks = {});

/// Records squared distance to theta_star and population suboptimality for
/// the iterate and its running average at geometrically spaced checkpoints
/// (every n = ceil(1.1^k)).
class TraceSink final : public StepSink {
  public:
    struct Point {
        std::int64_t n = 0;
        double rm_dist2 = 0.0;
        double rm_gap = 0.0;
        double pr_dist2 = 0.0;
        double pr_gap = 0.0;
        bool has_pr = false;
    };

    TraceSink(std::vector<double> theta_star, std::function<double(std::span<const double>)> pop_gap);
    void on_step(const StepView& view) override;
    const std::vector<Point>& points() const { return points_; }

  private:
    std::vector<double> theta_star_;
    std::function<double(std::span<const double>)> pop_gap_;
    std::vector<Point> points_;
    std::int64_t next_checkpoint_ = 1;
    int k_ = 0;
    std::vector<double> scratch_;
};

/// Reference explicit SGD on the same sample stream; used only by the
/// stability comparisons. Stops early once max_j |theta_j| crosses
/// `abort_threshold` (explicit SGD can overflow within a few steps at large
/// gamma1).
struct ExplicitSgdResult {
    std::vector<double> theta;
    double max_abs = 0.0;
    std::int64_t steps_to_exceed = -1;
};

ExplicitSgdResult explicit_sgd_run(const LossModel& model, SampleGenerator& gen,
                                   const LearningRate& lr, std::int64_t n_iters,
                                   std::span<const double> theta0, double abort_threshold);

}  // namespace isgd
