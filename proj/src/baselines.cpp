#include "gig/baselines.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace gig {

Tensor random_population(std::size_t n, double expected_degree, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("random population needs n >= 2");
    if (expected_degree < 0.0) throw std::invalid_argument("expected_degree must be non-negative");
    const double p = std::min(1.0, expected_degree / static_cast<double>(n - 1));
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<double> a(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (coin(rng) < p) a[i * n + j] = a[j * n + i] = 1.0;
        }
    }
    return Tensor::from({n, n}, std::move(a));
}

WLFeatureExtractor::WLFeatureExtractor(std::size_t iterations)
    : iterations_(iterations), dictionaries_(iterations) {}

WLFeatureMap WLFeatureExtractor::extract(const Graph& graph) {
    const std::size_t n = graph.node_count;
    std::vector<std::vector<std::size_t>> neighbors(n);
    for (const auto& [a, b] : graph.edges) {
        neighbors[a].push_back(b);
        neighbors[b].push_back(a);
    }
    std::vector<std::int64_t> colors(n);
    for (std::size_t v = 0; v < n; ++v) {
        colors[v] = graph.node_labels.empty() ? static_cast<std::int64_t>(neighbors[v].size())
                                              : graph.node_labels[v];
    }
    WLFeatureMap map;
    map.iterations = iterations_;
    auto record = [&] {
        auto& hist = map.histograms.emplace_back();
        for (auto c : colors) ++hist[c];
    };
    record();
    for (std::size_t it = 0; it < iterations_; ++it) {
        auto& dict = dictionaries_[it];
        std::vector<std::int64_t> next(n);
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<std::int64_t> key;
            key.reserve(neighbors[v].size() + 1);
            for (auto u : neighbors[v]) key.push_back(colors[u]);
            std::sort(key.begin(), key.end());
            key.insert(key.begin(), colors[v]);
            auto [pos, inserted] = dict.emplace(std::move(key), static_cast<std::int64_t>(dict.size()));
            next[v] = pos->second;
        }
        colors = std::move(next);
        record();
    }
    return map;
}

double wl_inner_product(const WLFeatureMap& a, const WLFeatureMap& b) {
    const std::size_t rounds = std::min(a.histograms.size(), b.histograms.size());
    double total = 0.0;
    for (std::size_t r = 0; r < rounds; ++r) {
        const auto& ha = a.histograms[r];
        const auto& hb = b.histograms[r];
        for (const auto& [label, count] : ha) {
            auto it = hb.find(label);
            if (it != hb.end()) total += static_cast<double>(count) * static_cast<double>(it->second);
        }
    }
    return total;
}

double wl_kernel(const Graph& g1, const Graph& g2, std::size_t iterations) {
    WLFeatureExtractor extractor(iterations);
    const auto a = extractor.extract(g1);
    const auto b = extractor.extract(g2);
    return wl_inner_product(a, b);
}

std::vector<std::vector<double>> wl_gram_matrix(std::span<const Graph* const> graphs, std::size_t iterations) {
    WLFeatureExtractor extractor(iterations);
    std::vector<WLFeatureMap> maps;
    maps.reserve(graphs.size());
    for (const Graph* g : graphs) maps.push_back(extractor.extract(*g));
    const std::size_t n = graphs.size();
    std::vector<std::vector<double>> gram(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) gram[i][j] = gram[j][i] = wl_inner_product(maps[i], maps[j]);
    return gram;
}

std::vector<std::vector<std::size_t>> top_k_neighbors(const std::vector<std::vector<double>>& similarity,
                                                      std::size_t k) {
    const std::size_t n = similarity.size();
    if (k >= n) {
        throw std::invalid_argument("k-nearest-neighbor graph needs k < n (k=" + std::to_string(k) +
                                    ", n=" + std::to_string(n) + ")");
    }
    std::vector<std::vector<std::size_t>> result(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> candidates;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) candidates.push_back(j);
        std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(k),
                          candidates.end(), [&](std::size_t a, std::size_t b) {
                              if (similarity[i][a] != similarity[i][b]) return similarity[i][a] > similarity[i][b];
                              return a < b;
                          });
        result[i].assign(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(k));
    }
    return result;
}

Tensor union_adjacency(const std::vector<std::vector<std::size_t>>& neighbors) {
    const std::size_t n = neighbors.size();
    std::vector<double> a(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (auto j : neighbors[i]) {
            if (j == i) continue;
            a[i * n + j] = a[j * n + i] = 1.0;
        }
    }
    return Tensor::from({n, n}, std::move(a));
}

Tensor knn_population(std::span<const Graph* const> graphs, std::size_t k, std::size_t iterations) {
    auto gram = wl_gram_matrix(graphs, iterations);
    const std::size_t n = gram.size();
    std::vector<std::vector<double>> sim(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double denom = std::sqrt(gram[i][i] * gram[j][j]);
            sim[i][j] = denom > 0.0 ? gram[i][j] / denom : 0.0;
        }
    }
    return union_adjacency(top_k_neighbors(sim, k));
}

Tensor knn_population(std::span<const Graph> graphs, std::size_t k, std::size_t iterations) {
    std::vector<const Graph*> ptrs;
    for (const auto& g : graphs) ptrs.push_back(&g);
    return knn_population(std::span<const Graph* const>(ptrs), k, iterations);
}

Tensor dynamic_knn_population(const Tensor& h, std::size_t k) {
    if (h.rank() != 2) throw std::invalid_argument("dynamic KNN expects an N x H matrix");
    const std::size_t n = h.dim(0), d = h.dim(1);
    const auto v = h.data();
    std::vector<std::vector<double>> neg_dist(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double sq = 0.0;
            for (std::size_t c = 0; c < d; ++c) {
                const double diff = v[i * d + c] - v[j * d + c];
                sq += diff * diff;
            }
            neg_dist[i][j] = neg_dist[j][i] = -std::sqrt(sq);
        }
    }
    return union_adjacency(top_k_neighbors(neg_dist, k));
}

}  // namespace gig
