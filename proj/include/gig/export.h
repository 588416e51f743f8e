#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "gig/config.h"
#include "gig/tensor.h"

namespace gig {

struct WeightedEdge {
    std::size_t source = 0;
    std::size_t target = 0;
    double weight = 0.0;

    bool operator==(const WeightedEdge&) const = default;
};

inline constexpr double kLglPlotThreshold = 0.01;
inline constexpr double kLglKlPlotThreshold = 0.5;
inline constexpr std::size_t kHistogramBins = 50;

double default_plot_threshold(ModelVariant variant);

// Pairs i < j with max(A[i][j], A[j][i]) > threshold, weighted by that value.
std::vector<WeightedEdge> thresholded_edges(const Tensor& adjacency, double threshold);

struct GraphExportPaths {
    std::filesystem::path dot;
    std::filesystem::path json;
};

// Writes <stem>.dot and <stem>.json. Nodes carry their class and a
// misclassified flag (drawn in red); edges carry their weight.
GraphExportPaths export_population_graph(const Tensor& adjacency, std::span<const std::int64_t> labels,
                                         std::span<const std::int64_t> predictions, double threshold,
                                         const std::filesystem::path& stem);

struct EdgeListFile {
    std::size_t node_count = 0;
    double threshold = 0.0;
    std::vector<WeightedEdge> edges;
};
EdgeListFile read_edge_list(const std::filesystem::path& json_path);

struct Histogram {
    double lower = 0.0;
    double upper = 1.0;
    std::vector<std::size_t> counts;

    double bin_width() const { return (upper - lower) / static_cast<double>(counts.size()); }
    std::size_t total() const;
};

// Values clamp into the first/last bin; the upper edge belongs to the last bin.
Histogram make_histogram(std::span<const double> values, double lower, double upper,
                         std::size_t bins = kHistogramBins);

// Off-diagonal entries of A on [0, 1].
Histogram value_histogram(const Tensor& adjacency, std::size_t bins = kHistogramBins);

struct DegreeHistograms {
    Histogram continuous;   // row sums of A
    Histogram thresholded;  // row sums of A * (A > 0.5)
};
// Both histograms span [0, N - 1].
DegreeHistograms degree_histograms(const Tensor& adjacency, std::size_t bins = kHistogramBins);

struct HistogramExportPaths {
    std::filesystem::path values;
    std::filesystem::path degrees;
};
// Writes <stem>_values.csv and <stem>_degrees.csv.
HistogramExportPaths export_histograms(const Tensor& adjacency, const std::filesystem::path& stem);

}  // namespace gig
