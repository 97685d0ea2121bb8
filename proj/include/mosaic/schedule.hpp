#ifndef MOSAIC_SCHEDULE_HPP
#define MOSAIC_SCHEDULE_HPP

#include <vector>

namespace mosaic {

struct ScheduleConfig {
    double eta_max = 1e-5;  // initial learning rate
    double eta_min = 0.0;
    int t_max = 9;  // total epoch count

    void validate() const;
};

struct OptimizerConfig {
    double learning_rate = 1e-5;
    double lambda_wd = 1e-5;  // decoupled weight decay coefficient
    int batch_size = 4;
    int epochs = 9;

    void validate() const;
};

struct GridSpec {
    std::vector<double> learning_rates = {1e-5, 2e-5, 3e-5};
    std::vector<double> weight_decays = {1e-4, 1e-5};
    std::vector<int> batch_sizes = {4, 8};

    void validate() const;
};

/// eta_min + (eta_max - eta_min)/2 * (1 + cos(t*pi/t_max)) for integer
/// epochs 0 <= t <= t_max. Endpoints are returned exactly.
double cosine_lr(const ScheduleConfig& config, int t);

/// Decoupled weight-decay update: theta' = theta - lr*grad - lr*lambda_wd*theta.
/// The decay shrinks parameters directly instead of entering the gradient.
std::vector<double> decoupled_wd_step(const std::vector<double>& theta,
                                      const std::vector<double>& grad, double lr,
                                      double lambda_wd);

/// Full Cartesian product of the grid lists, ordered lexicographically by
/// (learning_rate, weight_decay, batch_size) ascending.
std::vector<OptimizerConfig> enumerate_grid(const GridSpec& spec);

}  // namespace mosaic

#endif
