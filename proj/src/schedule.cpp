#include "mosaic/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "mosaic/error.hpp"

namespace mosaic {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

template <typename T>
void check_unique_nonempty(const std::vector<T>& v, const char* what) {
    if (v.empty()) {
        throw InvalidArgumentError(std::string("grid: ") + what + " list is empty");
    }
    std::unordered_set<T> seen(v.begin(), v.end());
    if (seen.size() != v.size()) {
        throw InvalidArgumentError(std::string("grid: duplicate value in ") + what + " list");
    }
}

}  // namespace

void ScheduleConfig::validate() const {
    if (!(eta_max > 0.0)) throw InvalidArgumentError("schedule: eta_max must be positive");
    if (eta_min < 0.0) throw InvalidArgumentError("schedule: eta_min must be non-negative");
    if (eta_min > eta_max) throw InvalidArgumentError("schedule: eta_min exceeds eta_max");
    if (t_max < 1) throw InvalidArgumentError("schedule: t_max must be at least 1");
}

void OptimizerConfig::validate() const {
    if (!(learning_rate > 0.0)) throw InvalidArgumentError("optimizer: learning rate must be positive");
    if (lambda_wd < 0.0) throw InvalidArgumentError("optimizer: weight decay must be non-negative");
    if (batch_size < 1) throw InvalidArgumentError("optimizer: batch size must be positive");
    if (epochs < 1) throw InvalidArgumentError("optimizer: epochs must be positive");
}

void GridSpec::validate() const {
    check_unique_nonempty(learning_rates, "learning rate");
    check_unique_nonempty(weight_decays, "weight decay");
    check_unique_nonempty(batch_sizes, "batch size");
    for (double v : learning_rates) {
        if (!(v > 0.0)) throw InvalidArgumentError("grid: learning rates must be positive");
    }
    for (double v : weight_decays) {
        if (v < 0.0) throw InvalidArgumentError("grid: weight decays must be non-negative");
    }
    for (int v : batch_sizes) {
        if (v < 1) throw InvalidArgumentError("grid: batch sizes must be positive");
    }
}

double cosine_lr(const ScheduleConfig& config, int t) {
    config.validate();
    if (t < 0 || t > config.t_max) {
        throw InvalidArgumentError("cosine_lr: epoch " + std::to_string(t) + " outside [0, " +
                                   std::to_string(config.t_max) + "]");
    }
    // cos(0) = 1 and cos(pi) = -1 collapse the formula to the bounds; return
    // them directly so the endpoints are exact in floating point too.
    if (t == 0) return config.eta_max;
    if (t == config.t_max) return config.eta_min;
    double angle = static_cast<double>(t) * kPi / static_cast<double>(config.t_max);
    return config.eta_min + 0.5 * (config.eta_max - config.eta_min) * (1.0 + std::cos(angle));
}

std::vector<double> decoupled_wd_step(const std::vector<double>& theta,
                                      const std::vector<double>& grad, double lr,
                                      double lambda_wd) {
    if (theta.size() != grad.size()) {
        throw ShapeError("decoupled_wd_step: theta length " + std::to_string(theta.size()) +
                         " vs grad length " + std::to_string(grad.size()));
    }
    std::vector<double> out(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) {
        out[i] = theta[i] - lr * grad[i] - lr * lambda_wd * theta[i];
    }
    return out;
}

std::vector<OptimizerConfig> enumerate_grid(const GridSpec& spec) {
    spec.validate();
    std::vector<double> lrs = spec.learning_rates;
    std::vector<double> wds = spec.weight_decays;
    std::vector<int> batches = spec.batch_sizes;
    std::sort(lrs.begin(), lrs.end());
    std::sort(wds.begin(), wds.end());
    std::sort(batches.begin(), batches.end());

    std::vector<OptimizerConfig> out;
    out.reserve(lrs.size() * wds.size() * batches.size());
    for (double lr : lrs) {
        for (double wd : wds) {
            for (int b : batches) {
                OptimizerConfig c;
                c.learning_rate = lr;
                c.lambda_wd = wd;
                c.batch_size = b;
                out.push_back(c);
            }
        }
    }
    return out;
}

}  // namespace mosaic
