#pragma once

#include <cstddef>
#include <vector>

#include "gig/tensor.h"

namespace gig {

inline constexpr double kDegreeAssignSigma = 0.6;
inline constexpr double kKlEpsilon = 1e-12;
inline constexpr double kEdgeThreshold = 0.5;

// A_p * (A_p > 0.5). The mask is a constant: gradients reach surviving
// entries only.
Tensor threshold_adjacency(const Tensor& adjacency);

// Column sums of a square matrix: d_j = sum_i A[i][j].
Tensor node_degrees(const Tensor& a_bar);

// bins x N matrix; column j is a Gaussian-kernel distribution of degree d_j
// over the integer bins 0..bins-1.
Tensor soft_assign(const Tensor& degrees, std::size_t bins, double sigma = kDegreeAssignSigma);

// p_i = sum_j S[i][j] / sum_{k,j} S[k][j]
Tensor degree_distribution(const Tensor& assignment);

// Discrete Gaussian over 0..bins-1 with learnable mean and log-std.
struct TargetDistribution {
    Tensor mu;         // [1]
    Tensor log_sigma;  // [1]

    // mu = n/4, sigma = n/8 for a population of n.
    static TargetDistribution init(std::size_t population);
    static TargetDistribution init(double mean, double stddev);

    double mean() const { return mu.item(); }
    double stddev() const;
    Tensor log_probabilities(std::size_t bins) const;
    Tensor probabilities(std::size_t bins) const;
    std::vector<Tensor> parameters() const { return {mu, log_sigma}; }
};

// sum_i p_i * log((p_i + eps) / q_i), with log q supplied directly.
Tensor kl_divergence(const Tensor& p, const Tensor& log_q);
Tensor kl_divergence(const Tensor& p, const TargetDistribution& q);

// ce + alpha * kl
Tensor total_loss(const Tensor& ce, const Tensor& kl, double alpha);

struct DegreeLossState {
    Tensor a_bar;
    Tensor degrees;
    Tensor assignment;
    Tensor distribution;
    double sigma_assign = kDegreeAssignSigma;
};

DegreeLossState degree_state(const Tensor& adjacency, double sigma = kDegreeAssignSigma);

// KL(p || q) for the population graph `adjacency`; the support is 0..N-1.
Tensor degree_kl_loss(const Tensor& adjacency, const TargetDistribution& target,
                      double sigma = kDegreeAssignSigma);

}  // namespace gig
