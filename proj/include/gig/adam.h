#pragma once

#include <cstddef>
#include <vector>

#include "gig/tensor.h"

namespace gig {

struct AdamOptions {
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

// Moment buffers for a fixed set of parameters.
class AdamState {
public:
    explicit AdamState(std::vector<Tensor> params, AdamOptions options = {});

    const std::vector<Tensor>& parameters() const { return params_; }
    std::size_t steps() const { return step_; }
    const AdamOptions& options() const { return options_; }
    const std::vector<std::vector<double>>& first_moments() const { return m_; }
    const std::vector<std::vector<double>>& second_moments() const { return v_; }

    friend void adam_step(AdamState& state, double learning_rate);

private:
    std::vector<Tensor> params_;
    AdamOptions options_;
    std::vector<std::vector<double>> m_;
    std::vector<std::vector<double>> v_;
    std::size_t step_ = 0;
};

// Bias-corrected update of every registered parameter, then zeroes grads.
// Throws std::logic_error if any parameter has no gradient.
void adam_step(AdamState& state, double learning_rate);

}  // namespace gig
