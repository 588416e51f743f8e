#include "gig/degree_loss.h"

#include <cmath>
#include <stdexcept>

#include "gig/ops.h"

namespace gig {

Tensor threshold_adjacency(const Tensor& adjacency) {
    return mul(adjacency, greater_than(adjacency, kEdgeThreshold));
}

Tensor node_degrees(const Tensor& a_bar) {
    if (a_bar.rank() != 2 || a_bar.dim(0) != a_bar.dim(1)) {
        throw std::invalid_argument("node_degrees: expected a square matrix, got " + to_string(a_bar.shape()));
    }
    return sum(a_bar, 0);
}

Tensor soft_assign(const Tensor& degrees, std::size_t bins, double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("soft_assign: sigma must be positive");
    if (bins == 0) throw std::invalid_argument("soft_assign: need at least one bin");
    const std::size_t n = degrees.numel();
    std::vector<double> centers(bins);
    for (std::size_t i = 0; i < bins; ++i) centers[i] = static_cast<double>(i);
    Tensor diff = sub(Tensor::from({bins, 1}, std::move(centers)), reshape(degrees, {1, n}));
    Tensor logits = scale(square(diff), -1.0 / (sigma * sigma));
    // Normalize each column (over bins).
    return transpose(softmax_rows(transpose(logits)));
}

Tensor degree_distribution(const Tensor& assignment) {
    return div(sum(assignment, 1), sum(assignment));
}

TargetDistribution TargetDistribution::init(std::size_t population) {
    const double n = static_cast<double>(population);
    return init(n / 4.0, n / 8.0);
}

TargetDistribution TargetDistribution::init(double mean, double stddev) {
    if (!(stddev > 0.0)) throw std::invalid_argument("target distribution needs a positive stddev");
    return {Tensor::scalar(mean, true), Tensor::scalar(std::log(stddev), true)};
}

double TargetDistribution::stddev() const { return std::exp(log_sigma.item()); }

Tensor TargetDistribution::log_probabilities(std::size_t bins) const {
    std::vector<double> centers(bins);
    for (std::size_t i = 0; i < bins; ++i) centers[i] = static_cast<double>(i);
    Tensor z = div(sub(Tensor::from({bins}, std::move(centers)), mu), exp(log_sigma));
    return log_softmax_rows(scale(square(z), -0.5));
}

Tensor TargetDistribution::probabilities(std::size_t bins) const { return exp(log_probabilities(bins)); }

Tensor kl_divergence(const Tensor& p, const Tensor& log_q) {
    if (p.shape() != log_q.shape()) {
        throw std::invalid_argument("kl_divergence: distributions of shape " + to_string(p.shape()) +
                                    " and " + to_string(log_q.shape()));
    }
    return sum(mul(p, sub(log(add_scalar(p, kKlEpsilon)), log_q)));
}

Tensor kl_divergence(const Tensor& p, const TargetDistribution& q) {
    return kl_divergence(p, q.log_probabilities(p.numel()));
}

Tensor total_loss(const Tensor& ce, const Tensor& kl, double alpha) {
    if (alpha < 0.0) throw std::invalid_argument("total_loss: alpha must be non-negative");
    return add(ce, scale(kl, alpha));
}

DegreeLossState degree_state(const Tensor& adjacency, double sigma) {
    DegreeLossState s;
    s.sigma_assign = sigma;
    s.a_bar = threshold_adjacency(adjacency);
    s.degrees = node_degrees(s.a_bar);
    s.assignment = soft_assign(s.degrees, adjacency.dim(0), sigma);
    s.distribution = degree_distribution(s.assignment);
    return s;
}

Tensor degree_kl_loss(const Tensor& adjacency, const TargetDistribution& target, double sigma) {
    return kl_divergence(degree_state(adjacency, sigma).distribution, target);
}

}  // namespace gig
