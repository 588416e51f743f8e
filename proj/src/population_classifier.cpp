#include "gig/population_classifier.h"

#include <stdexcept>

#include "gig/ops.h"

namespace gig {

Tensor dense_graph_conv(const Tensor& h, const Tensor& adjacency, const Tensor& w_self,
                        const Tensor& w_neigh, const Tensor& bias) {
    if (adjacency.rank() != 2 || adjacency.dim(0) != adjacency.dim(1) || h.rank() != 2 ||
        adjacency.dim(0) != h.dim(0)) {
        throw std::invalid_argument("dense graph conv: adjacency " + to_string(adjacency.shape()) +
                                    " does not match representations " + to_string(h.shape()));
    }
    if (w_self.shape() != w_neigh.shape() || h.dim(1) != w_self.dim(0)) {
        throw std::invalid_argument("dense graph conv: representations " + to_string(h.shape()) +
                                    " do not match weights " + to_string(w_self.shape()));
    }
    return add(add(matmul(h, w_self), matmul(matmul(adjacency, h), w_neigh)), bias);
}

DenseGraphConvLayer DenseGraphConvLayer::init(std::size_t in, std::size_t out, std::mt19937_64& rng) {
    if (in == 0 || out == 0) throw std::invalid_argument("graph conv dimensions must be positive");
    return {uniform_parameter({in, out}, in, rng), uniform_parameter({in, out}, in, rng),
            uniform_parameter({out}, in, rng)};
}

void ClassifierConfig::validate() const {
    if (head_dims.empty()) throw std::invalid_argument("classifier head needs at least one layer");
    if (head_dims.back() < 2) throw std::invalid_argument("classifier must output at least 2 classes");
    for (auto d : gnn_dims)
        if (d == 0) throw std::invalid_argument("classifier layer sizes must be positive");
    for (auto d : head_dims)
        if (d == 0) throw std::invalid_argument("classifier layer sizes must be positive");
}

PopulationClassifier::PopulationClassifier(const ClassifierConfig& config, std::size_t input_dim,
                                           std::mt19937_64& rng)
    : config_(config) {
    config_.validate();
    std::size_t in = input_dim;
    for (auto d : config_.gnn_dims) {
        gnn_.push_back(DenseGraphConvLayer::init(in, d, rng));
        in = d;
    }
    head_ = Mlp::init(in, config_.head_dims, rng);
}

std::vector<Tensor> PopulationClassifier::parameters() const {
    std::vector<Tensor> params;
    for (const auto& l : gnn_) {
        for (auto& p : l.parameters()) params.push_back(p);
    }
    for (auto& p : head_.parameters()) params.push_back(p);
    return params;
}

ClassifierOutput PopulationClassifier::forward(const Tensor& h, const Tensor& adjacency) const {
    Tensor x = h;
    for (const auto& layer : gnn_) x = relu(layer.forward(x, adjacency));
    Tensor logits = head_.forward(x);
    return {logits, softmax_rows(logits)};
}

ClassifierOutput f3_forward(const PopulationClassifier& classifier, const Tensor& h,
                            const PopulationGraph& population) {
    return classifier.forward(h, population.adjacency);
}

Tensor cross_entropy(const ClassifierOutput& output, std::span<const std::int64_t> labels) {
    return cross_entropy_logits(output.logits, labels);
}

}  // namespace gig
