#include "gig/latent_graph.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gig/ops.h"

namespace gig {

LatentGraphParams LatentGraphParams::init(std::size_t input_dim, const std::vector<std::size_t>& dims,
                                          std::mt19937_64& rng) {
    LatentGraphParams p;
    p.g = Mlp::init(input_dim, dims, rng);
    p.t_raw = Tensor::scalar(0.0, true);
    p.theta = Tensor::scalar(0.0, true);
    return p;
}

double LatentGraphParams::temperature() const { return std::exp(t_raw.item()); }

std::vector<Tensor> LatentGraphParams::parameters() const {
    auto params = g.parameters();
    params.push_back(t_raw);
    params.push_back(theta);
    return params;
}

Tensor embed(const LatentGraphParams& params, const Tensor& h) {
    if (h.rank() != 2 || h.dim(1) != params.g.in_dim()) {
        throw std::invalid_argument("embed: representation of shape " + to_string(h.shape()) +
                                    " for an MLP taking " + std::to_string(params.g.in_dim()) + " inputs");
    }
    return params.g.forward(h);
}

namespace {

Tensor off_diagonal_mask(std::size_t n) {
    std::vector<double> m(n * n, 1.0);
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 0.0;
    return Tensor::from({n, n}, std::move(m));
}

}  // namespace

PopulationGraph edge_weights(const LatentGraphParams& params, const Tensor& embedding) {
    const std::size_t n = embedding.dim(0);
    Tensor dist = pairwise_euclidean(embedding);
    Tensor logits = sub(params.theta, mul(exp(params.t_raw), dist));
    return {mul(sigmoid(logits), off_diagonal_mask(n)), embedding};
}

void initialize_threshold(LatentGraphParams& params, const Tensor& embedding) {
    const std::size_t n = embedding.dim(0);
    if (n < 2) return;
    Tensor dist = pairwise_euclidean(embedding.detach());
    std::vector<double> off;
    off.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) off.push_back(dist.at(i, j));
    auto mid = off.begin() + static_cast<std::ptrdiff_t>(off.size() / 2);
    std::nth_element(off.begin(), mid, off.end());
    params.theta.mutable_data()[0] = params.temperature() * *mid;
}

}  // namespace gig
