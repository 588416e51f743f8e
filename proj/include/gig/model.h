#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "gig/config.h"
#include "gig/degree_loss.h"
#include "gig/graph_data.h"
#include "gig/latent_graph.h"
#include "gig/node_level.h"
#include "gig/population_classifier.h"

namespace gig {

struct ModelOutput {
    Tensor h;           // F1 output
    Tensor adjacency;   // population graph used by F3
    ClassifierOutput classifier;
    Tensor ce;
    Tensor kl;          // undefined unless the variant carries the degree loss
    Tensor loss;
};

// F1 -> population builder (per variant) -> F3, plus the degree-loss target.
class GiGModel {
public:
    GiGModel(const RunConfig& config, std::size_t input_dim, std::uint64_t seed);

    ModelOutput forward(const GraphBatch& batch, std::uint64_t batch_seed) const;

    // Centers theta on the median latent distance of one batch.
    void initialize_threshold(const GraphBatch& batch);

    std::vector<Tensor> trainable_parameters() const;
    std::vector<std::vector<double>> snapshot() const;
    void restore(const std::vector<std::vector<double>>& values);

    const RunConfig& config() const { return config_; }
    NodeLevelModule& node_level() { return node_level_; }
    const NodeLevelModule& node_level() const { return node_level_; }
    LatentGraphParams& latent() { return latent_; }
    const LatentGraphParams& latent() const { return latent_; }
    PopulationClassifier& classifier() { return classifier_; }
    const PopulationClassifier& classifier() const { return classifier_; }
    TargetDistribution& target() { return target_; }
    const TargetDistribution& target() const { return target_; }

private:
    Tensor build_population(const GraphBatch& batch, const Tensor& h, std::uint64_t batch_seed) const;

    RunConfig config_;
    std::mt19937_64 init_rng_;
    NodeLevelModule node_level_;
    LatentGraphParams latent_;
    PopulationClassifier classifier_;
    TargetDistribution target_;
};

}  // namespace gig
