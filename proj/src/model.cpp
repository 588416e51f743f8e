#include "gig/model.h"

#include <algorithm>

#include "gig/baselines.h"
#include "gig/ops.h"

namespace gig {

GiGModel::GiGModel(const RunConfig& config, std::size_t input_dim, std::uint64_t seed)
    : config_(config),
      init_rng_(seed),
      node_level_(config.node_level, input_dim, init_rng_),
      latent_(LatentGraphParams::init(config.node_level.output_dim(), config.latent_dims, init_rng_)),
      classifier_(config.classifier, config.node_level.output_dim(), init_rng_),
      target_(TargetDistribution::init(config.batch_size)) {}

Tensor GiGModel::build_population(const GraphBatch& batch, const Tensor& h, std::uint64_t batch_seed) const {
    const std::size_t n = batch.size();
    switch (config_.variant) {
        case ModelVariant::gcn_only:
            return Tensor::zeros({n, n});
        case ModelVariant::random:
            return random_population(n, config_.random_expected_degree, batch_seed);
        case ModelVariant::knn: {
            if (n < 2) return Tensor::zeros({n, n});
            const auto& graphs = batch.graphs();
            return knn_population(std::span<const Graph* const>(graphs.data(), graphs.size()),
                                  std::min(config_.knn_k, n - 1), config_.wl_iterations);
        }
        case ModelVariant::dgcnn:
            if (n < 2) return Tensor::zeros({n, n});
            return dynamic_knn_population(h.detach(), std::min(config_.knn_k, n - 1));
        case ModelVariant::lgl:
        case ModelVariant::lgl_kl:
            return edge_weights(latent_, embed(latent_, h)).adjacency;
    }
    return Tensor::zeros({n, n});
}

ModelOutput GiGModel::forward(const GraphBatch& batch, std::uint64_t batch_seed) const {
    ModelOutput out;
    out.h = f1_forward(node_level_, batch);
    out.adjacency = build_population(batch, out.h, batch_seed);
    out.classifier = classifier_.forward(out.h, out.adjacency);
    out.ce = cross_entropy(out.classifier, batch.labels());
    if (config_.variant == ModelVariant::lgl_kl) {
        out.kl = degree_kl_loss(out.adjacency, target_);
        out.loss = total_loss(out.ce, out.kl, config_.alpha);
    } else {
        out.loss = out.ce;
    }
    return out;
}

void GiGModel::initialize_threshold(const GraphBatch& batch) {
    if (!learns_population(config_.variant)) return;
    Tensor h = f1_forward(node_level_, batch).detach();
    gig::initialize_threshold(latent_, embed(latent_, h).detach());
}

std::vector<Tensor> GiGModel::trainable_parameters() const {
    auto params = node_level_.parameters();
    if (learns_population(config_.variant)) {
        for (auto& p : latent_.parameters()) params.push_back(p);
    }
    for (auto& p : classifier_.parameters()) params.push_back(p);
    if (config_.variant == ModelVariant::lgl_kl) {
        for (auto& p : target_.parameters()) params.push_back(p);
    }
    return params;
}

std::vector<std::vector<double>> GiGModel::snapshot() const {
    std::vector<std::vector<double>> values;
    for (const auto& p : trainable_parameters()) {
        auto d = p.data();
        values.emplace_back(d.begin(), d.end());
    }
    return values;
}

void GiGModel::restore(const std::vector<std::vector<double>>& values) {
    auto params = trainable_parameters();
    if (values.size() != params.size()) throw std::invalid_argument("restore: parameter count mismatch");
    for (std::size_t k = 0; k < params.size(); ++k) {
        auto dst = params[k].mutable_data();
        if (dst.size() != values[k].size()) throw std::invalid_argument("restore: parameter size mismatch");
        std::copy(values[k].begin(), values[k].end(), dst.begin());
    }
}

}  // namespace gig
