#pragma once

#include <random>
#include <string>
#include <vector>

#include "gig/graph_data.h"
#include "gig/tensor.h"

namespace gig {

enum class Pooling { mean, add };

Pooling parse_pooling(const std::string& name);
std::string to_string(Pooling pooling);

// x'_i = W_self x_i + W_neigh * sum_{j in N(i)} x_j + b
struct GraphConvLayer {
    Tensor w_self;   // in x out
    Tensor w_neigh;  // in x out
    Tensor bias;     // out

    static GraphConvLayer init(std::size_t in, std::size_t out, std::mt19937_64& rng);
    std::vector<Tensor> parameters() const { return {w_self, w_neigh, bias}; }
};

Tensor graph_conv_forward(const GraphConvLayer& layer, const GraphBatch& batch, const Tensor& features);

// One row per graph: mean or sum of that graph's node rows.
Tensor global_pool(const GraphBatch& batch, const Tensor& node_features, Pooling mode);

struct NodeLevelConfig {
    std::vector<std::size_t> layer_dims{64, 64};
    Pooling pooling = Pooling::mean;

    std::size_t output_dim() const { return layer_dims.back(); }
    void validate() const;
};

// F1: graph convolutions (relu between layers) followed by global pooling.
class NodeLevelModule {
public:
    NodeLevelModule(const NodeLevelConfig& config, std::size_t input_dim, std::mt19937_64& rng);

    const NodeLevelConfig& config() const { return config_; }
    std::vector<GraphConvLayer>& layers() { return layers_; }
    const std::vector<GraphConvLayer>& layers() const { return layers_; }
    std::vector<Tensor> parameters() const;

private:
    NodeLevelConfig config_;
    std::vector<GraphConvLayer> layers_;
};

// h (N x H), one row per graph in the batch.
Tensor f1_forward(const NodeLevelModule& module, const GraphBatch& batch);

}  // namespace gig
