#pragma once

#include <random>
#include <vector>

#include "gig/layers.h"
#include "gig/tensor.h"

namespace gig {

// F2 parameters: embedding MLP g, temperature t = exp(t_raw) and soft
// threshold theta.
struct LatentGraphParams {
    Mlp g;
    Tensor t_raw;  // [1]
    Tensor theta;  // [1]

    static LatentGraphParams init(std::size_t input_dim, const std::vector<std::size_t>& dims,
                                  std::mt19937_64& rng);
    double temperature() const;
    std::vector<Tensor> parameters() const;
};

struct PopulationGraph {
    Tensor adjacency;  // N x N, symmetric, zero diagonal, off-diagonal in (0, 1)
    Tensor embedding;  // N x H'
};

// h~ = g(h)
Tensor embed(const LatentGraphParams& params, const Tensor& h);

// a_ij = sigmoid(theta - t * ||h~_i - h~_j||), diagonal set to 0. Close
// embeddings get weights near 1.
PopulationGraph edge_weights(const LatentGraphParams& params, const Tensor& embedding);

// Sets theta to t * (median off-diagonal distance of `embedding`) so the
// initial graph sits near half density.
void initialize_threshold(LatentGraphParams& params, const Tensor& embedding);

}  // namespace gig
