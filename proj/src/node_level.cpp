#include "gig/node_level.h"

#include <stdexcept>

#include "gig/layers.h"
#include "gig/ops.h"

namespace gig {

Pooling parse_pooling(const std::string& name) {
    if (name == "mean") return Pooling::mean;
    if (name == "add" || name == "sum") return Pooling::add;
    throw std::invalid_argument("unknown pooling '" + name + "' (expected mean or add)");
}

std::string to_string(Pooling pooling) { return pooling == Pooling::mean ? "mean" : "add"; }

GraphConvLayer GraphConvLayer::init(std::size_t in, std::size_t out, std::mt19937_64& rng) {
    if (in == 0 || out == 0) throw std::invalid_argument("graph conv dimensions must be positive");
    GraphConvLayer layer;
    layer.w_self = uniform_parameter({in, out}, in, rng);
    layer.w_neigh = uniform_parameter({in, out}, in, rng);
    layer.bias = uniform_parameter({out}, in, rng);
    return layer;
}

Tensor graph_conv_forward(const GraphConvLayer& layer, const GraphBatch& batch, const Tensor& features) {
    if (features.rank() != 2 || features.dim(0) != batch.total_nodes()) {
        throw std::invalid_argument("graph conv: features of shape " + to_string(features.shape()) +
                                    " for a batch of " + std::to_string(batch.total_nodes()) + " nodes");
    }
    if (features.dim(1) != layer.w_self.dim(0) || layer.w_neigh.shape() != layer.w_self.shape()) {
        throw std::invalid_argument("graph conv: features of shape " + to_string(features.shape()) +
                                    " do not match weights " + to_string(layer.w_self.shape()));
    }
    Tensor self_term = matmul(features, layer.w_self);
    Tensor neigh_term = matmul(neighbor_sum(features, batch.adjacency()), layer.w_neigh);
    return add(add(self_term, neigh_term), layer.bias);
}

Tensor global_pool(const GraphBatch& batch, const Tensor& node_features, Pooling mode) {
    return mode == Pooling::mean ? segment_mean(node_features, batch.node_offsets())
                                 : segment_sum(node_features, batch.node_offsets());
}

void NodeLevelConfig::validate() const {
    if (layer_dims.empty()) throw std::invalid_argument("node-level module needs at least one layer");
    for (auto d : layer_dims) {
        if (d == 0) throw std::invalid_argument("node-level layer sizes must be positive");
    }
}

NodeLevelModule::NodeLevelModule(const NodeLevelConfig& config, std::size_t input_dim, std::mt19937_64& rng)
    : config_(config) {
    config_.validate();
    std::size_t in = input_dim;
    for (auto d : config_.layer_dims) {
        layers_.push_back(GraphConvLayer::init(in, d, rng));
        in = d;
    }
}

std::vector<Tensor> NodeLevelModule::parameters() const {
    std::vector<Tensor> params;
    for (const auto& l : layers_) {
        for (auto& p : l.parameters()) params.push_back(p);
    }
    return params;
}

Tensor f1_forward(const NodeLevelModule& module, const GraphBatch& batch) {
    Tensor x = batch.features();
    const auto& layers = module.layers();
    for (std::size_t i = 0; i < layers.size(); ++i) {
        x = graph_conv_forward(layers[i], batch, x);
        if (i + 1 < layers.size()) x = relu(x);
    }
    return global_pool(batch, x, module.config().pooling);
}

}  // namespace gig
