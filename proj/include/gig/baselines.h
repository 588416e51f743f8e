#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "gig/graph_data.h"
#include "gig/tensor.h"

namespace gig {

inline constexpr std::size_t kDefaultWlIterations = 3;

// Erdos-Renyi population: each pair joins with probability
// min(1, expected_degree / (n - 1)).
Tensor random_population(std::size_t n, double expected_degree, std::uint64_t seed);

// Per-iteration histograms of compressed WL labels. Label ids are only
// comparable between maps produced by the same WLFeatureExtractor.
struct WLFeatureMap {
    std::size_t iterations = 0;
    std::vector<std::map<std::int64_t, std::size_t>> histograms;  // iterations + 1 entries
};

// Shared relabeling dictionary, so feature maps of different graphs agree.
class WLFeatureExtractor {
public:
    explicit WLFeatureExtractor(std::size_t iterations = kDefaultWlIterations);
    WLFeatureMap extract(const Graph& graph);
    std::size_t iterations() const { return iterations_; }

private:
    std::size_t iterations_;
    std::vector<std::map<std::vector<std::int64_t>, std::int64_t>> dictionaries_;
};

double wl_inner_product(const WLFeatureMap& a, const WLFeatureMap& b);

// Sum over refinement rounds 0..iterations of histogram inner products.
// Node labels are the initial colors; node degree is used when absent.
double wl_kernel(const Graph& g1, const Graph& g2, std::size_t iterations = kDefaultWlIterations);

// Gram matrix over a list of graphs (one shared dictionary).
std::vector<std::vector<double>> wl_gram_matrix(std::span<const Graph* const> graphs,
                                                std::size_t iterations = kDefaultWlIterations);

// Each graph connects to its k most similar others under the cosine-normalized
// WL kernel; ties go to the lower index; symmetrized by union.
Tensor knn_population(std::span<const Graph* const> graphs, std::size_t k,
                      std::size_t iterations = kDefaultWlIterations);
Tensor knn_population(std::span<const Graph> graphs, std::size_t k,
                      std::size_t iterations = kDefaultWlIterations);

// Euclidean k-nearest-neighbor graph on rows of h. A constant: no gradient
// flows through neighbor selection.
Tensor dynamic_knn_population(const Tensor& h, std::size_t k);

// Neighbor lists from a similarity matrix (higher = closer), ties by index.
std::vector<std::vector<std::size_t>> top_k_neighbors(const std::vector<std::vector<double>>& similarity,
                                                      std::size_t k);
Tensor union_adjacency(const std::vector<std::vector<std::size_t>>& neighbors);

}  // namespace gig
