#include "gig/adam.h"

#include <cmath>
#include <stdexcept>

namespace gig {

AdamState::AdamState(std::vector<Tensor> params, AdamOptions options)
    : params_(std::move(params)), options_(options) {
    for (const auto& p : params_) {
        if (!p.requires_grad()) throw std::invalid_argument("Adam: parameter does not require grad");
        m_.emplace_back(p.numel(), 0.0);
        v_.emplace_back(p.numel(), 0.0);
    }
}

void adam_step(AdamState& state, double learning_rate) {
    for (std::size_t k = 0; k < state.params_.size(); ++k) {
        if (!state.params_[k].has_grad()) {
            throw std::logic_error("Adam: parameter " + std::to_string(k) + " of shape " +
                                   to_string(state.params_[k].shape()) + " has no gradient");
        }
    }
    ++state.step_;
    const auto& o = state.options_;
    const double t = static_cast<double>(state.step_);
    const double c1 = 1.0 - std::pow(o.beta1, t);
    const double c2 = 1.0 - std::pow(o.beta2, t);
    for (std::size_t k = 0; k < state.params_.size(); ++k) {
        auto& p = state.params_[k];
        const auto g = p.grad();
        auto values = p.mutable_data();
        auto& m = state.m_[k];
        auto& v = state.v_[k];
        for (std::size_t i = 0; i < values.size(); ++i) {
            m[i] = o.beta1 * m[i] + (1.0 - o.beta1) * g[i];
            v[i] = o.beta2 * v[i] + (1.0 - o.beta2) * g[i] * g[i];
            const double m_hat = m[i] / c1;
            const double v_hat = v[i] / c2;
            values[i] -= learning_rate * m_hat / (std::sqrt(v_hat) + o.eps);
        }
        p.zero_grad();
    }
}

}  // namespace gig
