#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "gig/latent_graph.h"
#include "gig/layers.h"
#include "gig/tensor.h"

namespace gig {

// out = h W_self + A h W_neigh + b over a dense weighted population graph.
Tensor dense_graph_conv(const Tensor& h, const Tensor& adjacency, const Tensor& w_self,
                        const Tensor& w_neigh, const Tensor& bias);

struct DenseGraphConvLayer {
    Tensor w_self;
    Tensor w_neigh;
    Tensor bias;

    static DenseGraphConvLayer init(std::size_t in, std::size_t out, std::mt19937_64& rng);
    Tensor forward(const Tensor& h, const Tensor& adjacency) const {
        return dense_graph_conv(h, adjacency, w_self, w_neigh, bias);
    }
    std::vector<Tensor> parameters() const { return {w_self, w_neigh, bias}; }
};

struct ClassifierConfig {
    std::vector<std::size_t> gnn_dims{64};
    std::vector<std::size_t> head_dims{2};  // last entry is the class count

    std::size_t num_classes() const { return head_dims.back(); }
    void validate() const;
};

struct ClassifierOutput {
    Tensor logits;         // N x C
    Tensor probabilities;  // N x C, rows sum to 1
};

// F3: population message passing (relu after each layer), then a per-sample
// fully-connected head.
class PopulationClassifier {
public:
    PopulationClassifier(const ClassifierConfig& config, std::size_t input_dim, std::mt19937_64& rng);

    const ClassifierConfig& config() const { return config_; }
    std::vector<DenseGraphConvLayer>& gnn_layers() { return gnn_; }
    const std::vector<DenseGraphConvLayer>& gnn_layers() const { return gnn_; }
    Mlp& head() { return head_; }
    const Mlp& head() const { return head_; }
    std::vector<Tensor> parameters() const;

    ClassifierOutput forward(const Tensor& h, const Tensor& adjacency) const;

private:
    ClassifierConfig config_;
    std::vector<DenseGraphConvLayer> gnn_;
    Mlp head_;
};

ClassifierOutput f3_forward(const PopulationClassifier& classifier, const Tensor& h,
                            const PopulationGraph& population);

// Mean negative log-likelihood from logits (fused, stable).
Tensor cross_entropy(const ClassifierOutput& output, std::span<const std::int64_t> labels);

}  // namespace gig
